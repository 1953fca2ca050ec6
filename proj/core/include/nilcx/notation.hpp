#ifndef NILCX_NOTATION_HPP
#define NILCX_NOTATION_HPP

#include <string>
#include <variant>

#include "nilcx/lie_algebra.hpp"

namespace nilcx {

using AlgebraVariant =
    std::variant<LieAlgebra<Rational>, LieAlgebra<RationalFunction>>;

/// Tuple notation for nilpotent algebras of dimension at most 9: entry k
/// lists the terms of de^k, a digit pair "pq" standing for e^p ∧ e^q.  The
/// stored constants follow de^k = -sum a_pq^k e^pq, so "(0,0,12)" yields
/// [e1,e2] = -e3.  Reversed pairs carry the exterior-algebra sign: "42"
/// contributes -e^24.
LieAlgebra<Rational> parseSalamon(const std::string& text);

/// Inverse of parseSalamon; requires every constant in {-1, 0, 1} and
/// dimension at most 9.
std::string toSalamon(const LieAlgebra<Rational>& g);

/// Line format for arbitrary dimension and coefficients:
///   dim 10 field Q
///   d 9 = [1,2]+[4,5]
///   d 10 = 2*[1,3]-[4,6]
/// Lines starting with '#' and blank lines are skipped.  Coefficients are
/// scalar expressions in the declared field.
AlgebraVariant parseExtended(const std::string& text);

std::string toExtended(const LieAlgebra<Rational>& g);
std::string toExtended(const LieAlgebra<RationalFunction>& g);

std::size_t algebraDim(const AlgebraVariant& v);
bool isParametric(const AlgebraVariant& v);

/// Entry-wise promotion of constants into the rational function field.
LieAlgebra<RationalFunction> promoteToParametric(const LieAlgebra<Rational>& g);
Matrix<RationalFunction> promoteToParametric(const Matrix<Rational>& m);
Subspace<RationalFunction> promoteToParametric(const Subspace<Rational>& s);

}  // namespace nilcx

#endif
