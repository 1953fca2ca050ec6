#include <cctype>
#include <string>

#include "nilcx/fields.hpp"

namespace nilcx {

namespace {

// Recursive-descent parser for scalar expressions over Q(t,i).  Every field
// parses through this single grammar and then narrows, so that "t" inside a
// plain rational or "i" inside a real field fail with a clear message.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' uint]
//   primary:= uint | 't' | 'i' | '(' expr ')'
class ScalarParser {
 public:
  explicit ScalarParser(const std::string& text) : text_(text) {}

  Gaussian<RationalFunction> parse() {
    Gaussian<RationalFunction> v = parseExpr();
    skipSpace();
    if (pos_ != text_.size())
      throw SyntaxError("unexpected trailing input", pos_);
    return v;
  }

 private:
  using Value = Gaussian<RationalFunction>;

  Value parseExpr() {
    skipSpace();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (take() == '-');
    Value acc = parseTerm();
    if (neg) acc = -acc;
    for (;;) {
      skipSpace();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      Value t = parseTerm();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Value parseTerm() {
    Value acc = parseFactor();
    for (;;) {
      skipSpace();
      char c = peek();
      if (c != '*' && c != '/') break;
      std::size_t at = pos_;
      take();
      Value f = parseFactor();
      if (c == '*') {
        acc = acc * f;
      } else {
        if (isZero(f)) throw ParseError("division by zero", at);
        acc = acc / f;
      }
    }
    return acc;
  }

  Value parseFactor() {
    Value base = parsePrimary();
    skipSpace();
    if (peek() == '^') {
      std::size_t at = pos_;
      take();
      skipSpace();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw SyntaxError("exponent must be a nonnegative integer", pos_);
      unsigned long e = parseUInt(200, at);
      Value acc{RationalFunction(Rational(1))};
      for (unsigned long k = 0; k < e; ++k) acc = acc * base;
      return acc;
    }
    return base;
  }

  Value parsePrimary() {
    skipSpace();
    char c = peek();
    if (c == '(') {
      take();
      Value v = parseExpr();
      skipSpace();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      take();
      return v;
    }
    if (c == 't') {
      take();
      return Value{RationalFunction::t()};
    }
    if (c == 'i') {
      take();
      return Value::i();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) take();
      mpz_class n(text_.substr(start, pos_ - start));
      return Value{RationalFunction(Rational(n))};
    }
    if (c == '\0') throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  unsigned long parseUInt(unsigned long cap, std::size_t at) {
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned long>(take() - '0');
      if (v > cap) throw ParseError("exponent too large", at);
    }
    return v;
  }

  void skipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  const std::string& text_;
  std::size_t pos_ = 0;
};

bool isConstant(const RationalFunction& x) {
  return x.den().degree() == 0 && x.num().degree() <= 0;
}

Rational constantValue(const RationalFunction& x) { return x.eval(Rational(0)); }

}  // namespace

template <>
Gaussian<RationalFunction> parseScalar<Gaussian<RationalFunction>>(
    const std::string& text) {
  return ScalarParser(text).parse();
}

template <>
RationalFunction parseScalar<RationalFunction>(const std::string& text) {
  Gaussian<RationalFunction> v = ScalarParser(text).parse();
  if (!isZero(v.im))
    throw ParseError("imaginary unit not allowed in field Q(t)", 0);
  return v.re;
}

template <>
Gaussian<Rational> parseScalar<Gaussian<Rational>>(const std::string& text) {
  Gaussian<RationalFunction> v = ScalarParser(text).parse();
  if (!isConstant(v.re) || !isConstant(v.im))
    throw ParseError("parameter t not allowed in field Q(i)", 0);
  return Gaussian<Rational>(constantValue(v.re), constantValue(v.im));
}

template <>
Rational parseScalar<Rational>(const std::string& text) {
  Gaussian<RationalFunction> v = ScalarParser(text).parse();
  if (!isZero(v.im)) throw ParseError("imaginary unit not allowed in field Q", 0);
  if (!isConstant(v.re)) throw ParseError("parameter t not allowed in field Q", 0);
  return constantValue(v.re);
}

}  // namespace nilcx
