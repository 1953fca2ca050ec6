#include "nilcx/json_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "nilcx/errors.hpp"

namespace nilcx {

namespace {

using nlohmann::json;

template <class F>
const char* fieldName() {
  return FieldInfo<F>::name();
}

std::string scalarString(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw FormatError("scalar entries must be strings or integers");
}

template <class F>
F scalarFromJson(const json& j) {
  try {
    return parseScalar<F>(scalarString(j));
  } catch (const ParseError& e) {
    throw FormatError(std::string("bad scalar: ") + e.what());
  }
}

void checkFormat(const json& j) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  if (!j.contains("format") || !j["format"].is_number_integer() ||
      j["format"].get<int>() != 1)
    throw FormatError("missing or unsupported \"format\" field");
}

bool parametricField(const json& j) {
  std::string f = j.value("field", std::string("Q"));
  if (f == "Q") return false;
  if (f == "Q(t)") return true;
  throw FormatError("field must be \"Q\" or \"Q(t)\"");
}

template <class F>
json algebraToJsonT(const LieAlgebra<F>& g) {
  json brackets = json::array();
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        F c = g.structureConstant(i, j, k);
        if (isZero(c)) continue;
        brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                            {"c", toString(c)}});
      }
  return json{{"format", 1},
              {"dim", n},
              {"field", fieldName<F>()},
              {"brackets", std::move(brackets)}};
}

template <class F>
LieAlgebra<F> algebraFromJsonT(const json& j) {
  const std::size_t n = j["dim"].get<std::size_t>();
  if (n == 0 || n > 64) throw FormatError("dimension out of range");
  std::map<std::pair<std::size_t, std::size_t>, Vec<F>> brackets;
  for (const auto& b : j.value("brackets", json::array())) {
    std::size_t bi = b.at("i").get<std::size_t>();
    std::size_t bj = b.at("j").get<std::size_t>();
    std::size_t bk = b.at("k").get<std::size_t>();
    if (bi < 1 || bj < 1 || bk < 1 || bi > n || bj > n || bk > n)
      throw FormatError("bracket index out of range");
    F c = scalarFromJson<F>(b.at("c"));
    if (bi == bj) throw FormatError("bracket entry with i = j");
    if (bi > bj) {
      std::swap(bi, bj);
      c = -c;
    }
    auto [it, fresh] =
        brackets.try_emplace({bi - 1, bj - 1}, zeroVec<F>(n));
    it->second[bk - 1] += c;
  }
  std::vector<typename LieAlgebra<F>::Entry> table;
  for (auto& [key, value] : brackets)
    table.push_back({key.first, key.second, std::move(value)});
  return LieAlgebra<F>(n, table);
}

template <class F>
json matrixToJsonT(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(toString(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
Matrix<F> matrixFromJsonT(const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw FormatError("matrix has wrong row count");
  Matrix<F> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw FormatError("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = scalarFromJson<F>(j[i][c]);
  }
  return m;
}

std::pair<bool, std::size_t> parseBasisName(const std::string& name) {
  std::string s = name;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.size() < 2 || s[0] != 'e')
    throw FormatError("action entries look like \"e3\" or \"-e3\"");
  std::size_t idx = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw FormatError("action entries look like \"e3\" or \"-e3\"");
    idx = idx * 10 + static_cast<std::size_t>(s[k] - '0');
  }
  if (idx == 0) throw FormatError("basis indices are 1-based");
  return {neg, idx};
}

template <class F>
json subspaceToJsonT(const Subspace<F>& s) {
  json rows = json::array();
  for (const auto& b : s.basis()) {
    json row = json::array();
    for (const auto& x : b) row.push_back(toString(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
std::vector<Subspace<F>> filtrationFromJsonT(const json& terms,
                                             std::size_t dim) {
  std::vector<Subspace<F>> out;
  for (const auto& term : terms) {
    if (!term.is_array()) throw FormatError("filtration terms are vector lists");
    std::vector<Vec<F>> vecs;
    for (const auto& v : term) {
      if (!v.is_array() || v.size() != dim)
        throw FormatError("basis vector has wrong length");
      Vec<F> w(dim);
      for (std::size_t k = 0; k < dim; ++k) w[k] = scalarFromJson<F>(v[k]);
      vecs.push_back(std::move(w));
    }
    out.push_back(Subspace<F>::span(dim, vecs));
  }
  return out;
}

}  // namespace

json algebraToJson(const LieAlgebra<Rational>& g) { return algebraToJsonT(g); }
json algebraToJson(const LieAlgebra<RationalFunction>& g) {
  return algebraToJsonT(g);
}

AlgebraVariant algebraFromJson(const json& j) {
  checkFormat(j);
  if (!j.contains("dim")) throw FormatError("algebra needs a \"dim\" field");
  if (parametricField(j)) return algebraFromJsonT<RationalFunction>(j);
  return algebraFromJsonT<Rational>(j);
}

json matrixToJson(const Matrix<Rational>& m) { return matrixToJsonT(m); }
json matrixToJson(const Matrix<RationalFunction>& m) { return matrixToJsonT(m); }

json structureToJson(const Matrix<Rational>& m) {
  return json{{"format", 1}, {"field", "Q"}, {"matrix", matrixToJsonT(m)}};
}
json structureToJson(const Matrix<RationalFunction>& m) {
  return json{{"format", 1}, {"field", "Q(t)"}, {"matrix", matrixToJsonT(m)}};
}

Matrix<Rational> actionMatrix(
    std::size_t dim,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Matrix<Rational> m(dim, dim);
  std::vector<bool> used(dim, false);
  for (const auto& [fromName, toName] : pairs) {
    auto [fromNeg, a] = parseBasisName(fromName);
    auto [toNeg, b] = parseBasisName(toName);
    if (fromNeg) throw FormatError("action sources must be unsigned");
    if (a > dim || b > dim) throw FormatError("action index out of range");
    if (a == b) throw FormatError("action cannot pair an index with itself");
    if (used[a - 1] || used[b - 1])
      throw FormatError("action pairs must cover each index once");
    used[a - 1] = used[b - 1] = true;
    Rational s = toNeg ? -1 : 1;
    m.at(b - 1, a - 1) = s;
    m.at(a - 1, b - 1) = -s;
  }
  for (std::size_t k = 0; k < dim; ++k)
    if (!used[k])
      throw FormatError("action pairs must cover every basis index");
  return m;
}

MatrixVariant structureFromJson(const json& j, std::size_t dim) {
  checkFormat(j);
  if (j.contains("action")) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& p : j["action"]) {
      if (!p.is_array() || p.size() != 2)
        throw FormatError("action entries are [from, to] pairs");
      pairs.emplace_back(scalarString(p[0]), scalarString(p[1]));
    }
    return actionMatrix(dim, pairs);
  }
  if (!j.contains("matrix"))
    throw FormatError("structure needs \"matrix\" or \"action\"");
  if (parametricField(j))
    return matrixFromJsonT<RationalFunction>(j["matrix"], dim, dim);
  return matrixFromJsonT<Rational>(j["matrix"], dim, dim);
}

json subspaceToJson(const Subspace<Rational>& s) { return subspaceToJsonT(s); }
json subspaceToJson(const Subspace<RationalFunction>& s) {
  return subspaceToJsonT(s);
}

json filtrationToJson(const std::vector<Subspace<Rational>>& f) {
  json terms = json::array();
  for (const auto& s : f) terms.push_back(subspaceToJsonT(s));
  return json{{"format", 1}, {"field", "Q"}, {"terms", std::move(terms)}};
}
json filtrationToJson(const std::vector<Subspace<RationalFunction>>& f) {
  json terms = json::array();
  for (const auto& s : f) terms.push_back(subspaceToJsonT(s));
  return json{{"format", 1}, {"field", "Q(t)"}, {"terms", std::move(terms)}};
}

FiltrationVariant filtrationFromJson(const json& j, std::size_t dim) {
  checkFormat(j);
  if (!j.contains("terms") || !j["terms"].is_array())
    throw FormatError("filtration needs a \"terms\" list");
  if (parametricField(j))
    return filtrationFromJsonT<RationalFunction>(j["terms"], dim);
  return filtrationFromJsonT<Rational>(j["terms"], dim);
}

json loadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

void writeTextFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << content;
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nilcx
