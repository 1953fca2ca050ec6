#include <doctest.h>

#include <nilcx/matrix.hpp>
#include <nilcx/subspace.hpp>

using namespace nilcx;

namespace {

Vec<Rational> qvec(std::initializer_list<long> xs) {
  Vec<Rational> v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("matrix rref rank kernel") {
  auto m = Matrix<Rational>::fromRows({qvec({1, 2, 3}), qvec({2, 4, 6}), qvec({1, 0, 1})});
  CHECK(m.rank() == 2);
  auto ker = m.kernelBasis();
  REQUIRE(ker.size() == 1);
  for (const auto& v : ker) CHECK(isZeroVec(m.apply(v)));

  auto id = Matrix<Rational>::identity(3);
  CHECK((m * id).rank() == 2);
  CHECK(m.transpose().rank() == 2);
}

TEST_CASE("matrix inverse") {
  auto a = Matrix<Rational>::fromRows({qvec({2, 1}), qvec({1, 1})});
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK((a * *inv) == Matrix<Rational>::identity(2));

  // A singular matrix must yield no inverse even though the augmented
  // block [A | I] has full row rank.
  auto s = Matrix<Rational>::fromRows({qvec({1, 1}), qvec({1, 1})});
  CHECK(!s.inverse().has_value());
  CHECK(!Matrix<Rational>(3, 3).inverse().has_value());
}

TEST_CASE("subspace echelon basics") {
  auto s = Subspace<Rational>::span(3, {qvec({1, 1, 0}), qvec({2, 2, 0}), qvec({0, 0, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.contains(qvec({3, 3, 5})));
  CHECK(!s.contains(qvec({1, 0, 0})));
  auto c = s.coordinates(qvec({3, 3, 5}));
  REQUIRE(c.has_value());
  CHECK(!s.coordinates(qvec({1, 0, 0})).has_value());

  auto t = Subspace<Rational>::span(3, {qvec({1, 0, 0})});
  CHECK((s + t).isFull());
  CHECK(s.intersect(t).isZeroSpace());
  CHECK(Subspace<Rational>::full(3).intersect(s) == s);
  CHECK(s.nonPivotCoordinates() == std::vector<std::size_t>{1});
}

TEST_CASE("subspace reduce eliminates past the pivot column") {
  // Reduction against (1,2) must keep subtracting after the pivot entry of
  // the workspace vector goes to zero; a stale reference to that entry once
  // froze the multiplier mid-loop.
  auto s = Subspace<Rational>::span(2, {qvec({1, 2})});
  auto r = s.reduce(qvec({1, 0}));
  CHECK(r == qvec({0, -2}));
  CHECK(!s.contains(qvec({1, 0})));
  CHECK(s.contains(qvec({2, 4})));
}

TEST_CASE("annihilator and duality") {
  auto s = Subspace<Rational>::span(3, {qvec({1, 2, 0})});
  auto ann = annihilator(s);
  CHECK(ann.dim() == 2);
  for (const auto& f : ann.basis()) {
    Rational dot(0);
    for (std::size_t k = 0; k < 3; ++k) dot += f[k] * Rational(s.basis()[0][k]);
    CHECK(dot == Rational(0));
  }
  CHECK(annihilator(ann) == s);
}

TEST_CASE("complexify conjugate real points") {
  auto s = Subspace<Rational>::span(2, {qvec({1, 3})});
  auto sc = complexifySubspace(s);
  CHECK(sc.dim() == 1);
  CHECK(conjugateSubspace(sc) == sc);
  CHECK(realPoints(sc) == s);

  // A non conjugation-stable line has no real points.
  using GQ = Gaussian<Rational>;
  Vec<GQ> line{GQ(Rational(1), Rational(0)), GQ(Rational(0), Rational(1))};
  auto l = Subspace<GQ>::span(2, {line});
  CHECK(realPoints(l).isZeroSpace());
}

TEST_CASE("rational hull over the function field") {
  auto t = RationalFunction::t();
  Vec<RationalFunction> v{RationalFunction(Rational(1)), t};
  auto s = Subspace<RationalFunction>::span(2, {v});
  CHECK(!isRationalSubspace(s));
  auto hull = rationalHull(s);
  CHECK(hull.isFull());

  Vec<RationalFunction> w{t, t};
  auto sw = Subspace<RationalFunction>::span(2, {w});
  CHECK(isRationalSubspace(sw));
  CHECK(rationalHull(sw) == sw);
}

TEST_CASE("specialization of matrices and subspaces") {
  auto t = RationalFunction::t();
  Matrix<RationalFunction> m(2, 2);
  m.at(0, 0) = t;
  m.at(0, 1) = RationalFunction(Rational(1));
  m.at(1, 1) = t * t;
  auto m2 = specializeMatrix(m, Rational(2));
  CHECK(m2.at(0, 0) == Rational(2));
  CHECK(m2.at(1, 1) == Rational(4));

  Vec<RationalFunction> v{RationalFunction(Rational(1)), t};
  auto s = Subspace<RationalFunction>::span(2, {v});
  auto s3 = specializeSubspace(s, Rational(3));
  CHECK(s3.dim() == 1);
  CHECK(s3.contains(qvec({1, 3})));

  Matrix<RationalFunction> pole(1, 1);
  pole.at(0, 0) = RationalFunction(Rational(1)) / t;
  CHECK_THROWS_AS(specializeMatrix(pole, Rational(0)), PoleAtPoint);
}

TEST_CASE("ambient mismatches throw") {
  auto s = Subspace<Rational>::span(2, {qvec({1, 0})});
  CHECK_THROWS_AS(s.contains(qvec({1, 0, 0})), AmbientMismatch);
  CHECK_THROWS_AS(s.intersect(Subspace<Rational>::full(3)), AmbientMismatch);
}
