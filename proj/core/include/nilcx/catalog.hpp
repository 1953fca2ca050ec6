#ifndef NILCX_CATALOG_HPP
#define NILCX_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilcx/bundle_series.hpp"
#include "nilcx/notation.hpp"
#include "nilcx/sampling.hpp"

namespace nilcx {

/// What a stored structure is expected to satisfy; unset fields are not
/// checked.  Values were frozen from exact computations with this library
/// after cross-checking the independent oracles.
struct StructureExpectation {
  bool integrable = true;
  std::optional<bool> abelian;
  std::optional<bool> parallelisable;
  std::optional<bool> nilpotentJ;
  std::optional<bool> centreInvariant;
  std::optional<bool> derivedInvariant;
  /// Expected dimension of the limit term of the v-series.
  std::optional<std::size_t> vDim;
};

struct NamedStructure {
  std::string name;
  Matrix<Rational> matrix;
  StructureExpectation expected;
};

/// Structure family with entries in the rational function field; one free
/// parameter t.
struct ParametricStructure {
  std::string name;
  Matrix<RationalFunction> matrix;
  StructureExpectation expected;
};

enum class BaseKind { Unspecified, Torus, Elliptic, KodairaType };

struct CatalogEntry {
  std::string name;
  /// Tuple notation when the dimension allows it.
  std::string tuple;
  LieAlgebra<Rational> algebra;
  std::vector<NamedStructure> structures;
  std::vector<ParametricStructure> families;

  /// Bundle-tower expectations for the classification rows.
  std::optional<std::size_t> fibreComplexDim;
  BaseKind base = BaseKind::Unspecified;
  /// Entries whose canonical series is a torus bundle series for every
  /// structure but never principal.
  bool stableNonPrincipal = false;

  std::optional<std::size_t> expectedStep;
  std::optional<std::size_t> expectedDerivedDim;
  std::optional<std::size_t> expectedCentreDim;
};

const std::vector<std::string>& catalogNames();

/// Resolves fixed names plus the generator forms "heisenberg(n,m)" and
/// "torus_over_curve(k)".
CatalogEntry catalogGet(const std::string& name);

/// Heisenberg algebra of dimension 2n+1 plus an abelian factor of dimension
/// m, on basis x_1..x_n, y_1..y_n, c, z_1..z_m with [x_i, y_i] = c.
LieAlgebra<Rational> heisenberg(std::size_t n, std::size_t m);

/// Standard structure on heisenberg(n,m): x_i -> y_i, z pairs, c -> z_m;
/// defined when the total dimension is even.
Matrix<Rational> heisenbergStandardJ(std::size_t n, std::size_t m);

/// Central extension of an abelian algebra by one relation [e_1, e_2] = z_2k
/// on basis e_1, e_2, z_1..z_2k; dimension 2k+2.
LieAlgebra<Rational> torusOverCurve(std::size_t k);
Matrix<Rational> torusOverCurveJ(std::size_t k);

/// Integrable-structure sampler for an entry, when one is implemented:
/// conjugates a stored structure by automorphisms from the entry's family.
std::optional<ComplexStructure<Rational>> sampleStructure(
    const CatalogEntry& entry, Rng& rng);
bool hasStructureSampler(const std::string& name);

struct VerifyLine {
  std::string entry;
  std::string claim;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  bool allOk() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
};

/// Replays every stored expectation: construction oracles, structure
/// classification, invariance patterns, and the bundle tower rows.
VerifyReport verifyAll();

}  // namespace nilcx

#endif
