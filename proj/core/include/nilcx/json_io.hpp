#ifndef NILCX_JSON_IO_HPP
#define NILCX_JSON_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "nilcx/notation.hpp"
#include "nilcx/subspace.hpp"

namespace nilcx {

using MatrixVariant = std::variant<Matrix<Rational>, Matrix<RationalFunction>>;
using FiltrationVariant = std::variant<std::vector<Subspace<Rational>>,
                                       std::vector<Subspace<RationalFunction>>>;

/// Algebra schema: { "format": 1, "dim": n, "field": "Q"|"Q(t)",
/// "brackets": [ {"i":1,"j":2,"k":5,"c":"-1"}, ... ] } with 1-based indices
/// i < j and only nonzero coefficients of e_k in [e_i, e_j].
nlohmann::json algebraToJson(const LieAlgebra<Rational>& g);
nlohmann::json algebraToJson(const LieAlgebra<RationalFunction>& g);
AlgebraVariant algebraFromJson(const nlohmann::json& j);

nlohmann::json matrixToJson(const Matrix<Rational>& m);
nlohmann::json matrixToJson(const Matrix<RationalFunction>& m);

/// Structure schema, either an explicit matrix
///   { "format": 1, "field": "Q", "matrix": [["0","-1"],["1","0"]] }
/// or a signed action list
///   { "format": 1, "action": [["e1","e2"],["e3","-e4"]] }
/// where ["e1","e2"] declares J e1 = e2 (and J e2 = -e1 follows).
nlohmann::json structureToJson(const Matrix<Rational>& m);
nlohmann::json structureToJson(const Matrix<RationalFunction>& m);
MatrixVariant structureFromJson(const nlohmann::json& j, std::size_t dim);

/// Signed pairing matrix from action pairs like {"e1","-e3"}.
Matrix<Rational> actionMatrix(
    std::size_t dim,
    const std::vector<std::pair<std::string, std::string>>& pairs);

nlohmann::json subspaceToJson(const Subspace<Rational>& s);
nlohmann::json subspaceToJson(const Subspace<RationalFunction>& s);

/// Filtration schema: { "format": 1, "field": ..., "terms": [t0, t1, ...] },
/// each term a list of coordinate-string basis vectors; the zero term is an
/// empty list.
nlohmann::json filtrationToJson(const std::vector<Subspace<Rational>>& f);
nlohmann::json filtrationToJson(const std::vector<Subspace<RationalFunction>>& f);
FiltrationVariant filtrationFromJson(const nlohmann::json& j, std::size_t dim);

nlohmann::json loadJsonFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& content);
std::string readTextFile(const std::string& path);

}  // namespace nilcx

#endif
