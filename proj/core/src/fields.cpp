#include "nilcx/fields.hpp"

#include <utility>

namespace nilcx {

bool isZero(const Rational& x) { return sgn(x) == 0; }

std::string toString(const Rational& x) { return x.get_str(); }

Rational ratFromLong(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Polynomial::Polynomial(const Rational& c) {
  if (!nilcx::isZero(c)) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::t() {
  return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && nilcx::isZero(coeffs_.back())) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (isZero() || o.isZero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
      c[a + b] += coeffs_[a] * o.coeffs_[b];
  return Polynomial(std::move(c));
}

void Polynomial::divrem(const Polynomial& a, const Polynomial& b, Polynomial& q,
                        Polynomial& r) {
  if (b.isZero()) throw DivisionByZero("polynomial division by zero");
  q = Polynomial();
  r = a;
  std::vector<Rational> qc(
      a.degree() >= b.degree() ? static_cast<std::size_t>(a.degree() - b.degree() + 1) : 0,
      Rational(0));
  while (!r.isZero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational f = r.leading() / b.leading();
    qc[static_cast<std::size_t>(shift)] = f;
    std::vector<Rational> sub(static_cast<std::size_t>(shift), Rational(0));
    for (const auto& c : b.coeffs_) sub.push_back(f * c);
    r = r - Polynomial(std::move(sub));
  }
  q = Polynomial(std::move(qc));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.isZero()) {
    Polynomial q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  Polynomial r = *this;
  Rational lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.isZero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divrem(num_, g, q, r);
    num_ = q;
    Polynomial::divrem(den_, g, q, r);
    den_ = q;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Polynomial scaled_num, scaled_den, q, r;
    Polynomial l(lead);
    Polynomial::divrem(num_, l, scaled_num, r);
    Polynomial::divrem(den_, l, scaled_den, r);
    num_ = scaled_num;
    den_ = scaled_den;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.isZero()) throw DivisionByZero();
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

Rational RationalFunction::eval(const Rational& at) const {
  Rational d = den_.eval(at);
  if (nilcx::isZero(d))
    throw PoleAtPoint("pole at t = " + toString(at));
  return num_.eval(at) / d;
}

bool isZero(const RationalFunction& x) { return x.isZero(); }

std::string toString(const Polynomial& p) {
  if (p.isZero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (isZero(c)) continue;
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    std::string body;
    if (k == 0) {
      body = toString(mag);
    } else {
      if (mag != 1) body = toString(mag) + "*";
      body += "t";
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

std::string toString(const RationalFunction& x) {
  if (x.den().degree() == 0) return toString(x.num());
  return "(" + toString(x.num()) + ")/(" + toString(x.den()) + ")";
}

namespace {

bool isNegForDisplay(const Rational& x) { return sgn(x) < 0; }
bool isNegForDisplay(const RationalFunction& x) {
  return !x.isZero() && sgn(x.num().leading()) < 0;
}

bool isOne(const Rational& x) { return x == 1; }
bool isOne(const RationalFunction& x) {
  return x.den().degree() == 0 && x.num().degree() == 0 && !x.isZero() &&
         x.num().leading() == 1;
}

bool needsParens(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == ' ' && depth == 0) return true;
  }
  return false;
}

template <class F>
std::string gaussToString(const Gaussian<F>& x) {
  auto imagTerm = [](const F& m) -> std::string {
    if (isOne(m)) return "i";
    std::string s = toString(m);
    if (needsParens(s)) s = "(" + s + ")";
    return s + "*i";
  };
  if (isZero(x.im)) return toString(x.re);
  bool neg = isNegForDisplay(x.im);
  F mag = neg ? F(-x.im) : x.im;
  if (isZero(x.re)) return (neg ? "-" : "") + imagTerm(mag);
  return toString(x.re) + (neg ? " - " : " + ") + imagTerm(mag);
}

}  // namespace

std::string toString(const Gaussian<Rational>& x) { return gaussToString(x); }
std::string toString(const Gaussian<RationalFunction>& x) { return gaussToString(x); }

}  // namespace nilcx
