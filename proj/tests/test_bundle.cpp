#include <doctest.h>

#include <nilcx/bundle_series.hpp>
#include <nilcx/catalog.hpp>

using namespace nilcx;

namespace {

ComplexStructure<Rational> stored(const std::string& name, std::size_t which = 0) {
  auto e = catalogGet(name);
  return ComplexStructure<Rational>(e.algebra, e.structures.at(which).matrix);
}

}  // namespace

TEST_CASE("filtration validation") {
  auto cs = stored("h7");
  const auto& g = cs.algebra();
  std::vector<Subspace<Rational>> tooShort{g.fullSpace()};
  CHECK_THROWS_AS(checkSeries(cs, tooShort), BadFiltration);
  std::vector<Subspace<Rational>> noZero{g.derived(), g.fullSpace()};
  CHECK_THROWS_AS(checkSeries(cs, noZero), BadFiltration);
  std::vector<Subspace<Rational>> noTop{Subspace<Rational>::zero(6), g.derived()};
  CHECK_THROWS_AS(checkSeries(cs, noTop), BadFiltration);
  std::vector<Subspace<Rational>> repeat{Subspace<Rational>::zero(6), g.derived(),
                                         g.derived(), g.fullSpace()};
  CHECK_THROWS_AS(checkSeries(cs, repeat), BadFiltration);
}

TEST_CASE("adapted series of a nilpotent structure is principal") {
  auto cs = stored("h7");
  auto verdict = checkSeries(cs, cs.adaptedSeries());
  CHECK(verdict.overall == SeriesKind::Principal);
  CHECK(verdict.firstFailure().empty());
  for (const auto& s : verdict.steps) CHECK(s.principalOk());
}

TEST_CASE("stable torus bundle that is never principal") {
  auto cs = stored("h19m");
  const auto& g = cs.algebra();
  auto mid = Subspace<Rational>::span(
      6, {g.basisVec(1), g.basisVec(3), g.basisVec(4), g.basisVec(5)});
  std::vector<Subspace<Rational>> filt{Subspace<Rational>::zero(6), mid,
                                       g.fullSpace()};
  auto verdict = checkSeries(cs, filt);
  CHECK(verdict.overall == SeriesKind::TorusBundle);
  CHECK(verdict.firstFailure() == "centrality failed at step 2");
}

TEST_CASE("parameter family fails rationality but specializes cleanly") {
  auto e = catalogGet("badex");
  ComplexStructure<RationalFunction> jt(promoteToParametric(e.algebra),
                                        e.families.front().matrix);
  auto filt = jt.adaptedSeries();
  REQUIRE(filt.size() == 4);
  CHECK(filt[1].dim() == 2);
  CHECK(!isRationalSubspace(filt[1]));

  auto verdict = checkSeries(jt, filt);
  CHECK(verdict.overall == SeriesKind::None);
  CHECK(verdict.firstFailure() == "rationality failed at step 2");

  auto half = jt.specialize(ratFromLong(1, 2));
  std::vector<Subspace<Rational>> filtHalf;
  for (const auto& s : filt) filtHalf.push_back(specializeSubspace(s, ratFromLong(1, 2)));
  auto fixed = checkSeries(half, filtHalf);
  CHECK(fixed.overall == SeriesKind::Principal);
}

TEST_CASE("series proposals") {
  auto p1 = proposeSeries(stored("h1"));
  REQUIRE(p1.has_value());
  CHECK(p1->label == "torus");
  CHECK(p1->verdict.overall == SeriesKind::Principal);
  CHECK(p1->filtration.size() == 2);

  auto p8 = proposeSeries(stored("h8"));
  REQUIRE(p8.has_value());
  CHECK(p8->verdict.overall != SeriesKind::None);

  for (const char* name : {"h2", "h6", "h9", "h16", "h26p"}) {
    auto p = proposeSeries(stored(name));
    REQUIRE(p.has_value());
    CHECK(p->verdict.overall != SeriesKind::None);
  }
}

TEST_CASE("stability sampling") {
  auto e = catalogGet("h19m");
  auto cs = stored("h19m");
  const auto& g = cs.algebra();
  auto mid = Subspace<Rational>::span(
      6, {g.basisVec(1), g.basisVec(3), g.basisVec(4), g.basisVec(5)});
  std::vector<Subspace<Rational>> filt{Subspace<Rational>::zero(6), mid,
                                       g.fullSpace()};

  Rng rng(2026);
  auto sampler = [&]() { return sampleStructure(e, rng); };
  auto report = stabilitySample(filt, sampler, 10, SeriesKind::TorusBundle);
  CHECK(report.samplesChecked == 10);
  CHECK(!report.counterexample.has_value());
  CHECK(std::string(StabilityReport<Rational>::disclaimer()).find("not proof") !=
        std::string::npos);

  // demanding principality must produce a counterexample at once
  auto refuted = stabilitySample(filt, sampler, 10, SeriesKind::Principal);
  REQUIRE(refuted.counterexample.has_value());
  CHECK(refuted.counterexample->verdict.firstFailure().rfind("centrality", 0) == 0);

  auto empty = [&]() { return std::optional<ComplexStructure<Rational>>{}; };
  CHECK_THROWS_AS(stabilitySample(filt, empty, 3), SamplerExhausted);
}

TEST_CASE("albanese quotient dimensions") {
  auto alb7 = albaneseDimension(stored("h7"));
  CHECK(alb7.dimAlb == 1);
  CHECK(alb7.proper);
  CHECK(alb7.w.dim() == 4);

  auto e = catalogGet("badex");
  ComplexStructure<RationalFunction> jt(promoteToParametric(e.algebra),
                                        e.families.front().matrix);
  auto albT = albaneseDimension(jt);
  CHECK(albT.dimAlb == 0);
  CHECK(!albT.proper);
  auto albHalf = albaneseDimension(jt.specialize(ratFromLong(1, 2)));
  CHECK(albHalf.dimAlb == 1);
  CHECK(albHalf.proper);

  auto torus = ComplexStructure<Rational>(LieAlgebra<Rational>::abelian(4),
                                          standardAlmostComplexMatrix<Rational>(4));
  auto albTorus = albaneseDimension(torus);
  CHECK(albTorus.dimAlb == 2);

  auto toc = catalogGet("torus_over_curve(3)");
  auto albToc = albaneseDimension(
      ComplexStructure<Rational>(toc.algebra, toc.structures.front().matrix));
  CHECK(albToc.dimAlb == 3);
}
