#ifndef NILCX_FIELDS_HPP
#define NILCX_FIELDS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nilcx/errors.hpp"

namespace nilcx {

/// Arbitrary precision rational number in canonical form (coprime numerator
/// and denominator, positive denominator, zero stored as 0/1).
using Rational = mpq_class;

bool isZero(const Rational& x);
std::string toString(const Rational& x);
Rational ratFromLong(long num, long den = 1);

/// Univariate polynomial in the parameter t with rational coefficients.
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and degree() is -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Rational& c);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial t();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const Rational& leading() const;
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Quotient and remainder with deg(rem) < deg(divisor).
  static void divrem(const Polynomial& a, const Polynomial& b, Polynomial& q,
                     Polynomial& r);
  /// Monic greatest common divisor.
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial monic() const;
  Rational eval(const Rational& at) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(t): a fraction of polynomials with monic denominator and
/// coprime numerator and denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  explicit RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Value at t = at; throws PoleAtPoint when the denominator vanishes there.
  Rational eval(const Rational& at) const;

 private:
  void normalize();
  Polynomial num_, den_;
};

bool isZero(const RationalFunction& x);
std::string toString(const Polynomial& p);
std::string toString(const RationalFunction& x);

/// Adjoins a square root of -1 to the base field F.
template <class F>
struct Gaussian {
  F re{};
  F im{};

  Gaussian() = default;
  Gaussian(F r) : re(std::move(r)), im() {}
  Gaussian(F r, F i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return Gaussian(F(0), F(1)); }

  Gaussian operator-() const { return Gaussian(F(-re), F(-im)); }
  Gaussian operator+(const Gaussian& o) const {
    return Gaussian(F(re + o.re), F(im + o.im));
  }
  Gaussian operator-(const Gaussian& o) const {
    return Gaussian(F(re - o.re), F(im - o.im));
  }
  Gaussian operator*(const Gaussian& o) const {
    return Gaussian(F(re * o.re - im * o.im), F(re * o.im + im * o.re));
  }
  Gaussian operator/(const Gaussian& o) const {
    F n = F(o.re * o.re + o.im * o.im);
    if (isZero(n)) throw DivisionByZero();
    return Gaussian(F((re * o.re + im * o.im) / n), F((im * o.re - re * o.im) / n));
  }
  Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
  Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }
  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

template <class F>
bool isZero(const Gaussian<F>& x) {
  return isZero(x.re) && isZero(x.im);
}

template <class F>
Gaussian<F> conjScalar(const Gaussian<F>& x) {
  return Gaussian<F>(x.re, F(-x.im));
}
inline Rational conjScalar(const Rational& x) { return x; }
inline RationalFunction conjScalar(const RationalFunction& x) { return x; }

std::string toString(const Gaussian<Rational>& x);
std::string toString(const Gaussian<RationalFunction>& x);

/// Compile-time description of the four supported coefficient fields.
template <class F>
struct FieldInfo;

template <>
struct FieldInfo<Rational> {
  static constexpr bool parametric = false;
  static constexpr bool complexified = false;
  using Complexified = Gaussian<Rational>;
  using Specialized = Rational;
  static const char* name() { return "Q"; }
};

template <>
struct FieldInfo<RationalFunction> {
  static constexpr bool parametric = true;
  static constexpr bool complexified = false;
  using Complexified = Gaussian<RationalFunction>;
  using Specialized = Rational;
  static const char* name() { return "Q(t)"; }
};

template <>
struct FieldInfo<Gaussian<Rational>> {
  static constexpr bool parametric = false;
  static constexpr bool complexified = true;
  using Real = Rational;
  using Complexified = Gaussian<Rational>;
  using Specialized = Gaussian<Rational>;
  static const char* name() { return "Q(i)"; }
};

template <>
struct FieldInfo<Gaussian<RationalFunction>> {
  static constexpr bool parametric = true;
  static constexpr bool complexified = true;
  using Real = RationalFunction;
  using Complexified = Gaussian<RationalFunction>;
  using Specialized = Gaussian<Rational>;
  static const char* name() { return "Q(t,i)"; }
};

template <class F>
Gaussian<F> complexifyScalar(const F& x) {
  return Gaussian<F>(x);
}

inline Rational specializeScalar(const Rational& x, const Rational&) { return x; }
inline Rational specializeScalar(const RationalFunction& x, const Rational& at) {
  return x.eval(at);
}
template <class F>
Gaussian<Rational> specializeScalar(const Gaussian<F>& x, const Rational& at) {
  return Gaussian<Rational>(specializeScalar(x.re, at), specializeScalar(x.im, at));
}

/// Parses the canonical text form of a scalar; accepts exactly the values of
/// the requested field and rejects, e.g., a parameter inside plain Q.
template <class F>
F parseScalar(const std::string& text);

template <>
Rational parseScalar<Rational>(const std::string& text);
template <>
RationalFunction parseScalar<RationalFunction>(const std::string& text);
template <>
Gaussian<Rational> parseScalar<Gaussian<Rational>>(const std::string& text);
template <>
Gaussian<RationalFunction> parseScalar<Gaussian<RationalFunction>>(const std::string& text);

namespace detail {
inline Rational makeScalar(long n, Rational*) { return Rational(n); }
inline RationalFunction makeScalar(long n, RationalFunction*) {
  return RationalFunction(Rational(n));
}
template <class F>
Gaussian<F> makeScalar(long n, Gaussian<F>*) {
  return Gaussian<F>(makeScalar(n, static_cast<F*>(nullptr)));
}
}  // namespace detail

/// Embeds a small integer into any of the four fields.
template <class F>
F scalarFromInt(long n) {
  return detail::makeScalar(n, static_cast<F*>(nullptr));
}

template <class F>
F scalarOne() {
  return scalarFromInt<F>(1);
}

enum class FieldOp { Add, Sub, Mul, Div };

/// Single arithmetic step with an explicit division-by-zero check; the
/// operators themselves are used everywhere internally.
template <class F>
F fieldArith(const F& a, const F& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return F(a + b);
    case FieldOp::Sub: return F(a - b);
    case FieldOp::Mul: return F(a * b);
    case FieldOp::Div:
      if (isZero(b)) throw DivisionByZero();
      return F(a / b);
  }
  throw Error("unreachable");
}

}  // namespace nilcx

#endif
