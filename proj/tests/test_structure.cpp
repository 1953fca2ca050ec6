#include <doctest.h>

#include <nilcx/catalog.hpp>
#include <nilcx/complex_structure.hpp>
#include <nilcx/json_io.hpp>
#include <nilcx/sampling.hpp>

using namespace nilcx;

namespace {

std::vector<std::size_t> dims(const std::vector<Subspace<Rational>>& s) {
  std::vector<std::size_t> out;
  for (const auto& x : s) out.push_back(x.dim());
  return out;
}

}  // namespace

TEST_CASE("constructor validates the square") {
  auto g = LieAlgebra<Rational>::abelian(2);
  CHECK_THROWS_AS(ComplexStructure<Rational>(g, Matrix<Rational>::identity(2)),
                  Error);
  CHECK_NOTHROW(ComplexStructure<Rational>(g, standardAlmostComplexMatrix<Rational>(2)));
  CHECK_THROWS_AS(
      ComplexStructure<Rational>(g, standardAlmostComplexMatrix<Rational>(4)),
      DimensionMismatch);
}

TEST_CASE("torus structure is of every special type") {
  auto g = LieAlgebra<Rational>::abelian(4);
  ComplexStructure<Rational> cs(g, standardAlmostComplexMatrix<Rational>(4));
  auto c = cs.classify();
  CHECK(c.integrable);
  CHECK(c.abelian);
  CHECK(c.parallelisable);
  CHECK(c.nilpotent);

  auto hol = cs.holomorphicSpace();
  CHECK(hol.dim() == 2);
  CHECK(cs.antiholomorphicSpace() == conjugateSubspace(hol));
  CHECK(hol.intersect(cs.antiholomorphicSpace()).isZeroSpace());
}

TEST_CASE("free two step structures") {
  auto e = catalogGet("h7");
  ComplexStructure<Rational> j0(e.algebra, e.structures.front().matrix);
  CHECK(j0.isIntegrable());
  CHECK(!j0.isAbelianStructure());
  CHECK(j0.isNilpotentStructure());
  CHECK(dims(j0.adaptedSeries()) == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(dims(j0.cJSeries()) == std::vector<std::size_t>{6, 4, 0});
  CHECK(j0.vSubspace().dim() == 2);
  CHECK(j0.largestInvariantInCentre().dim() == 2);
  CHECK(j0.jClosure(e.algebra.derived()).dim() == 4);

  // swapping generators into the centre is never integrable here
  auto cross = actionMatrix(6, {{"e1", "e4"}, {"e2", "e5"}, {"e3", "e6"}});
  ComplexStructure<Rational> bad(e.algebra, cross);
  CHECK(!isZeroVec(bad.nijenhuis(e.algebra.basisVec(0), e.algebra.basisVec(1))));
  CHECK(!bad.isIntegrable());
  auto flags = bad.classify();
  CHECK(!flags.integrable);
  CHECK(!flags.abelian);
  CHECK(!flags.parallelisable);
}

TEST_CASE("largest invariant subspace dual routes") {
  auto e = catalogGet("h7");
  ComplexStructure<Rational> j0(e.algebra, e.structures.front().matrix);
  const auto& g = e.algebra;
  auto v = Subspace<Rational>::span(6, {g.basisVec(0), g.basisVec(1), g.basisVec(2)});
  auto w = j0.largestInvariant(v);
  CHECK(w == Subspace<Rational>::span(6, {g.basisVec(0), g.basisVec(1)}));

  // independent route: real points of (V tensor C) cap (hol + antihol parts)
  auto vc = complexifySubspace(v);
  auto plus = vc.intersect(j0.holomorphicSpace());
  auto viaReal = realPoints(plus + conjugateSubspace(plus));
  CHECK(viaReal == w);
}

TEST_CASE("holomorphic space round trip") {
  auto e = catalogGet("h5");
  ComplexStructure<Rational> cs(e.algebra, e.structures.front().matrix);
  auto back = structureFromHolomorphicSpace(e.algebra, cs.holomorphicSpace());
  REQUIRE(back.has_value());
  CHECK(back->matrix() == cs.matrix());

  // a conjugation stable half-dimensional space cannot split off
  auto real = complexifySubspace(Subspace<Rational>::span(
      6, {e.algebra.basisVec(0), e.algebra.basisVec(1), e.algebra.basisVec(2)}));
  CHECK(!structureFromHolomorphicSpace(e.algebra, real).has_value());
}

TEST_CASE("adapted basis and frame") {
  auto e = catalogGet("h7");
  ComplexStructure<Rational> j0(e.algebra, e.structures.front().matrix);
  auto xs = j0.adaptedRealBasis();
  REQUIRE(xs.size() == 3);
  auto frame = j0.adaptedFrame();
  CHECK(frame.inverse().has_value());
}

TEST_CASE("parametric family specializes onto the stored structure") {
  auto e = catalogGet("badex");
  REQUIRE(!e.families.empty());
  ComplexStructure<RationalFunction> jt(promoteToParametric(e.algebra),
                                        e.families.front().matrix);
  CHECK(jt.isIntegrable());
  auto at0 = jt.specialize(Rational(0));
  CHECK(at0.matrix() == e.structures.front().matrix);
  CHECK(jt.specialize(ratFromLong(1, 2)).isIntegrable());
}

TEST_CASE("integrability survives automorphism conjugation") {
  auto e = catalogGet("h7");
  Rng rng(41);
  for (int k = 0; k < 5; ++k) {
    auto cs = sampleStructure(e, rng);
    REQUIRE(cs.has_value());
    CHECK(cs->isIntegrable());
    CHECK(cs->algebra().fingerprint() == e.algebra.fingerprint());
  }
}
