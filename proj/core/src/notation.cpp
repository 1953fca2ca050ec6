#include "nilcx/notation.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "nilcx/errors.hpp"

namespace nilcx {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() {
    if (done()) throw SyntaxError("unexpected end of input", pos);
    return text[pos++];
  }
  void expect(char c) {
    if (peek() != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  void skipSpace() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
};

int salamonDigit(Cursor& cur) {
  char c = cur.peek();
  if (c < '1' || c > '9')
    throw SyntaxError("expected a basis index digit 1-9", cur.pos);
  ++cur.pos;
  return c - '0';
}

}  // namespace

LieAlgebra<Rational> parseSalamon(const std::string& text) {
  Cursor cur{text};
  cur.skipSpace();
  cur.expect('(');
  // terms[k][(p,q)] accumulates the coefficient of e^pq in de^(k+1)
  std::vector<std::map<std::pair<int, int>, Rational>> entries;
  for (;;) {
    cur.skipSpace();
    std::map<std::pair<int, int>, Rational> entry;
    if (cur.peek() == '0') {
      ++cur.pos;
    } else {
      Rational sign = 1;
      for (;;) {
        cur.skipSpace();
        std::size_t termPos = cur.pos;
        int p = salamonDigit(cur);
        int q = salamonDigit(cur);
        if (p == q)
          throw SyntaxError("repeated index in wedge term", termPos);
        Rational coeff = sign;
        if (p > q) {
          std::swap(p, q);
          coeff = -coeff;
        }
        entry[{p, q}] += coeff;
        cur.skipSpace();
        if (cur.peek() == '+') {
          sign = 1;
          ++cur.pos;
        } else if (cur.peek() == '-') {
          sign = -1;
          ++cur.pos;
        } else {
          break;
        }
      }
    }
    entries.push_back(std::move(entry));
    cur.skipSpace();
    if (cur.peek() == ',') {
      ++cur.pos;
      continue;
    }
    cur.expect(')');
    break;
  }
  cur.skipSpace();
  if (!cur.done()) throw SyntaxError("trailing input after ')'", cur.pos);

  const std::size_t n = entries.size();
  if (n > 9) throw DimensionTooLarge("tuple notation supports at most 9 entries");
  std::map<std::pair<std::size_t, std::size_t>, Vec<Rational>> brackets;
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& [pq, c] : entries[k]) {
      if (static_cast<std::size_t>(pq.second) > n)
        throw DimensionTooLarge("index " + std::to_string(pq.second) +
                                " exceeds dimension " + std::to_string(n));
      if (isZero(c)) continue;
      auto key = std::make_pair(static_cast<std::size_t>(pq.first - 1),
                                static_cast<std::size_t>(pq.second - 1));
      auto [it, fresh] = brackets.try_emplace(key, zeroVec<Rational>(n));
      it->second[k] -= c;
    }
  std::vector<LieAlgebra<Rational>::Entry> table;
  for (auto& [key, value] : brackets)
    table.push_back({key.first, key.second, std::move(value)});
  return LieAlgebra<Rational>(n, table);
}

std::string toSalamon(const LieAlgebra<Rational>& g) {
  const std::size_t n = g.dim();
  if (n > 9) throw DimensionTooLarge("tuple notation supports at most 9 entries");
  std::string out = "(";
  for (std::size_t k = 0; k < n; ++k) {
    if (k) out += ',';
    std::string entry;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        Rational a = g.structureConstant(p, q, k);
        if (isZero(a)) continue;
        Rational coeff = -a;
        if (!(coeff == 1) && !(coeff == -1))
          throw FormatError("constant not representable in tuple notation");
        if (coeff == 1) {
          if (!entry.empty()) entry += '+';
        } else {
          entry += '-';
        }
        entry += static_cast<char>('1' + p);
        entry += static_cast<char>('1' + q);
      }
    out += entry.empty() ? "0" : entry;
  }
  out += ')';
  return out;
}

namespace {

std::size_t parseUnsigned(Cursor& cur) {
  cur.skipSpace();
  if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw SyntaxError("expected a number", cur.pos);
  std::size_t v = 0;
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    v = v * 10 + static_cast<std::size_t>(cur.take() - '0');
    if (v > 1000) throw DimensionTooLarge("index out of range");
  }
  return v;
}

void expectWord(Cursor& cur, const std::string& w) {
  cur.skipSpace();
  if (cur.text.compare(cur.pos, w.size(), w) != 0)
    throw SyntaxError("expected '" + w + "'", cur.pos);
  cur.pos += w.size();
}

template <class F>
LieAlgebra<F> parseExtendedBody(const std::string& text, Cursor& cur,
                                std::size_t n) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, F> accum;
  while (!cur.done()) {
    cur.skipSpace();
    if (cur.peek() == '\n' || cur.peek() == '\r') {
      ++cur.pos;
      continue;
    }
    if (cur.peek() == '#') {
      while (!cur.done() && cur.peek() != '\n') ++cur.pos;
      continue;
    }
    if (cur.done()) break;
    expectWord(cur, "d");
    std::size_t k = parseUnsigned(cur);
    if (k < 1 || k > n)
      throw DimensionTooLarge("differential index " + std::to_string(k) +
                              " out of range");
    cur.skipSpace();
    cur.expect('=');
    bool negate = false;
    for (;;) {
      cur.skipSpace();
      // everything before the term's '[' at paren depth zero is the
      // coefficient expression
      std::size_t scan = cur.pos;
      int depth = 0;
      while (scan < text.size()) {
        char c = text[scan];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '[' && depth == 0) break;
        if (c == '\n') break;
        ++scan;
      }
      if (scan >= text.size() || text[scan] != '[')
        throw SyntaxError("expected '[i,j]' term", cur.pos);
      std::string coeffText = text.substr(cur.pos, scan - cur.pos);
      while (!coeffText.empty() &&
             (coeffText.back() == ' ' || coeffText.back() == '*'))
        coeffText.pop_back();
      F coeff = scalarOne<F>();
      if (!coeffText.empty()) {
        try {
          coeff = parseScalar<F>(coeffText);
        } catch (const ParseError& e) {
          throw SyntaxError(e.what(), cur.pos);
        }
      }
      if (negate) coeff = -coeff;
      cur.pos = scan + 1;
      std::size_t i = parseUnsigned(cur);
      cur.skipSpace();
      cur.expect(',');
      std::size_t j = parseUnsigned(cur);
      cur.skipSpace();
      cur.expect(']');
      if (i < 1 || i > n || j < 1 || j > n)
        throw DimensionTooLarge("basis index out of range");
      if (i == j) throw SyntaxError("repeated index in wedge term", cur.pos);
      if (i > j) {
        std::swap(i, j);
        coeff = -coeff;
      }
      accum[{i - 1, j - 1, k - 1}] += coeff;
      cur.skipSpace();
      if (cur.peek() == '+') {
        negate = false;
        ++cur.pos;
      } else if (cur.peek() == '-') {
        negate = true;
        ++cur.pos;
      } else {
        break;
      }
    }
    cur.skipSpace();
    if (!cur.done() && cur.peek() != '\n' && cur.peek() != '\r')
      throw SyntaxError("trailing input after term list", cur.pos);
  }
  std::map<std::pair<std::size_t, std::size_t>, Vec<F>> brackets;
  for (const auto& [ijk, c] : accum) {
    if (isZero(c)) continue;
    auto [i, j, k] = ijk;
    auto [it, fresh] = brackets.try_emplace({i, j}, zeroVec<F>(n));
    it->second[k] -= c;
  }
  std::vector<typename LieAlgebra<F>::Entry> table;
  for (auto& [key, value] : brackets)
    table.push_back({key.first, key.second, std::move(value)});
  return LieAlgebra<F>(n, table);
}

template <class F>
std::string extendedBody(const LieAlgebra<F>& g) {
  std::ostringstream out;
  const std::size_t n = g.dim();
  for (std::size_t k = 0; k < n; ++k) {
    std::string line;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        F a = g.structureConstant(p, q, k);
        if (isZero(a)) continue;
        F coeff = -a;
        std::string cs = toString(coeff);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (line.empty()) {
          if (neg) line += "-";
        } else {
          line += neg ? " - " : " + ";
        }
        if (cs != "1") {
          bool atomic = cs.find(' ') == std::string::npos &&
                        cs.find('+') == std::string::npos &&
                        cs.find('-') == std::string::npos;
          line += atomic ? cs : "(" + cs + ")";
          line += "*";
        }
        line += "[" + std::to_string(p + 1) + "," + std::to_string(q + 1) + "]";
      }
    if (!line.empty())
      out << "d " << (k + 1) << " = " << line << "\n";
  }
  return out.str();
}

}  // namespace

AlgebraVariant parseExtended(const std::string& text) {
  Cursor cur{text};
  expectWord(cur, "dim");
  std::size_t n = parseUnsigned(cur);
  if (n == 0 || n > 64) throw DimensionTooLarge("dimension out of range");
  expectWord(cur, "field");
  cur.skipSpace();
  bool parametric = false;
  if (cur.text.compare(cur.pos, 4, "Q(t)") == 0) {
    parametric = true;
    cur.pos += 4;
  } else if (cur.peek() == 'Q') {
    ++cur.pos;
  } else {
    throw SyntaxError("expected field Q or Q(t)", cur.pos);
  }
  if (parametric)
    return parseExtendedBody<RationalFunction>(text, cur, n);
  return parseExtendedBody<Rational>(text, cur, n);
}

std::string toExtended(const LieAlgebra<Rational>& g) {
  return "dim " + std::to_string(g.dim()) + " field Q\n" + extendedBody(g);
}

std::string toExtended(const LieAlgebra<RationalFunction>& g) {
  return "dim " + std::to_string(g.dim()) + " field Q(t)\n" + extendedBody(g);
}

std::size_t algebraDim(const AlgebraVariant& v) {
  return std::visit([](const auto& g) { return g.dim(); }, v);
}

bool isParametric(const AlgebraVariant& v) {
  return std::holds_alternative<LieAlgebra<RationalFunction>>(v);
}

LieAlgebra<RationalFunction> promoteToParametric(const LieAlgebra<Rational>& g) {
  const std::size_t n = g.dim();
  std::vector<LieAlgebra<RationalFunction>::Entry> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec<Rational>& v = g.basisBracket(i, j);
      if (isZeroVec(v)) continue;
      Vec<RationalFunction> w(n);
      for (std::size_t k = 0; k < n; ++k) w[k] = RationalFunction(v[k]);
      table.push_back({i, j, std::move(w)});
    }
  return LieAlgebra<RationalFunction>(n, table);
}

Matrix<RationalFunction> promoteToParametric(const Matrix<Rational>& m) {
  Matrix<RationalFunction> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = RationalFunction(m.at(i, j));
  return out;
}

Subspace<RationalFunction> promoteToParametric(const Subspace<Rational>& s) {
  std::vector<Vec<RationalFunction>> rows;
  for (const auto& b : s.basis()) {
    Vec<RationalFunction> w(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) w[k] = RationalFunction(b[k]);
    rows.push_back(std::move(w));
  }
  return Subspace<RationalFunction>::span(s.ambient(), rows);
}

}  // namespace nilcx
