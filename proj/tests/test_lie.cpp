#include <doctest.h>

#include <nilcx/catalog.hpp>
#include <nilcx/lie_algebra.hpp>
#include <nilcx/sampling.hpp>

using namespace nilcx;
using QAlg = LieAlgebra<Rational>;

namespace {

Vec<Rational> qvec(std::initializer_list<long> xs) {
  Vec<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("construction rejects jacobi violations with a witness") {
  // [e1,e2] = e3, [e1,e3] = e1 breaks the identity on the triple (1,2,3).
  std::vector<QAlg::Entry> bad{{0, 1, qvec({0, 0, 1})}, {0, 2, qvec({1, 0, 0})}};
  CHECK_THROWS_AS(QAlg(3, bad), JacobiFailure);
  try {
    QAlg g(3, bad);
  } catch (const JacobiFailure& e) {
    CHECK(std::string(e.what()).find("(1,2,3)") != std::string::npos);
  }
  auto loose = QAlg::unchecked(3, bad);
  CHECK(!loose.jacobiHolds());
}

TEST_CASE("heisenberg bracket table") {
  auto g = heisenberg(2, 1);
  CHECK(g.dim() == 6);
  // basis x1,x2,y1,y2,c,z1 with [x_i, y_i] = c
  CHECK(g.basisBracket(0, 2) == g.basisVec(4));
  CHECK(g.basisBracket(2, 0) == g.bracket(g.basisVec(2), g.basisVec(0)));
  CHECK(isZeroVec(g.basisBracket(0, 3)));
  CHECK(g.structureConstant(1, 3, 4) == Rational(1));
  CHECK(g.structureConstant(3, 1, 4) == Rational(-1));

  CHECK(g.isNilpotent());
  CHECK(g.step() == 2);
  CHECK(g.derived().dim() == 1);
  CHECK(g.centre().dim() == 2);
  CHECK(!g.isAbelian());
  CHECK(QAlg::abelian(4).isAbelian());
}

TEST_CASE("central series endpoints") {
  auto g = heisenberg(1, 0);
  auto desc = g.descendingCentralSeries();
  REQUIRE(desc.size() == 3);
  CHECK(desc[0].isFull());
  CHECK(desc[1] == g.derived());
  CHECK(desc[2].isZeroSpace());

  auto asc = g.ascendingCentralSeries();
  REQUIRE(asc.size() == 3);
  CHECK(asc[0].isZeroSpace());
  CHECK(asc[1] == g.centre());
  CHECK(asc[2].isFull());

  std::vector<QAlg::Entry> solvable{{0, 1, qvec({0, 1})}};
  QAlg aff(2, solvable);
  CHECK(!aff.isNilpotent());
  CHECK_THROWS_AS(aff.ascendingCentralSeries(), NotNilpotent);
  CHECK_THROWS_AS(aff.step(), NotNilpotent);
}

TEST_CASE("ideals restriction and quotient") {
  auto g = heisenberg(1, 1);
  CHECK(g.isIdeal(g.derived()));
  CHECK(g.isIdeal(g.centre()));
  CHECK(!g.isIdeal(Subspace<Rational>::span(4, {g.basisVec(0)})));

  auto inside = g.restrictTo(g.centre());
  CHECK(inside.isAbelian());

  auto q = g.quotientBy(g.centre());
  CHECK(q.algebra.dim() == 2);
  CHECK(q.algebra.isAbelian());
  // projection kills the ideal and is onto
  for (const auto& b : g.centre().basis()) CHECK(isZeroVec(q.projection.apply(b)));
  CHECK(q.projection.rank() == 2);
  CHECK(q.complementCoords.size() == 2);

  CHECK_THROWS_AS(g.quotientBy(Subspace<Rational>::span(4, {g.basisVec(0)})), NotAnIdeal);
}

TEST_CASE("subspace bracket matches derived") {
  auto g = catalogGet("h7").algebra;
  CHECK(g.subspaceBracket(g.fullSpace(), g.fullSpace()) == g.derived());
  CHECK(g.subspaceBracket(g.derived(), g.fullSpace()).isZeroSpace());
}

TEST_CASE("fingerprint survives base change") {
  auto g = catalogGet("h9").algebra;
  Rng rng(7);
  auto p = randomUnimodular<Rational>(rng, g.dim(), 10);
  auto h = g.changeBasis(p);
  CHECK(g.fingerprint() == h.fingerprint());
  auto fp = g.fingerprint();
  CHECK(fp.dim == 6);
  CHECK(fp.step == 3);
  CHECK(fp.derivedDim == 2);
  CHECK(fp.centreDim == 2);
}

TEST_CASE("complexify and specialize") {
  auto g = heisenberg(1, 1);
  auto gc = g.complexify();
  CHECK(gc.dim() == 4);
  CHECK(gc.basisBracket(0, 1) == complexifyVec(g.basisBracket(0, 1)));

  auto gt = promoteToParametric(g);
  auto back = gt.specialize(ratFromLong(1, 2));
  CHECK(back.fingerprint() == g.fingerprint());
  CHECK(back.structureConstant(0, 1, 2) == Rational(1));
}

TEST_CASE("ad surjectivity refuter") {
  CHECK_THROWS_AS(heisenberg(2, 1).adSurjectivityRefuter(), HypothesisViolated);

  auto w = heisenberg(1, 0).adSurjectivityRefuter();
  REQUIRE(w.has_value());
  CHECK(w->rank < w->derivedDim);

  auto h7 = catalogGet("h7").algebra;
  auto w7 = h7.adSurjectivityRefuter();
  REQUIRE(w7.has_value());
  CHECK(w7->rank == 2);
  CHECK(w7->derivedDim == 3);
}
