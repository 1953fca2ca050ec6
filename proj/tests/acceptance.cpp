// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// process exits with the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nilcx/bundle_series.hpp>
#include <nilcx/catalog.hpp>
#include <nilcx/cohomology.hpp>
#include <nilcx/json_io.hpp>
#include <nilcx/notation.hpp>
#include <nilcx/sampling.hpp>

using namespace nilcx;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

ComplexStructure<Rational> stored(const std::string& name, std::size_t which = 0) {
  auto e = catalogGet(name);
  return ComplexStructure<Rational>(e.algebra, e.structures.at(which).matrix);
}

ComplexStructure<RationalFunction> storedFamily(const std::string& name) {
  auto e = catalogGet(name);
  return ComplexStructure<RationalFunction>(promoteToParametric(e.algebra),
                                            e.families.at(0).matrix);
}

// ---------------------------------------------------------------- criterion 1
// Structure constants of every named catalog algebra satisfy the Jacobi
// identity and the squared differential vanishes on one-forms.
Outcome criterion1() {
  Outcome out;
  std::size_t sixDim = 0, higher = 0;
  for (const auto& name : catalogNames()) {
    auto e = catalogGet(name);
    bool viaBracket = e.algebra.jacobiHolds();
    bool viaDifferential = jacobiViaDifferential(e.algebra);
    out.require(viaBracket, name + ": jacobi fails");
    out.require(viaDifferential, name + ": d^2 != 0");
    (e.algebra.dim() == 6 ? sixDim : higher) += 1;
  }
  out.require(sixDim == 19, "expected 19 six dimensional entries");
  out.require(higher == 5, "expected 5 higher dimensional entries");
  return out;
}

// ---------------------------------------------------------------- criterion 2
// Integrability of every worked structure, with the two detection routes
// compared internally on each call.
Outcome criterion2() {
  Outcome out;
  out.require(storedFamily("badex").isIntegrable(),
              "parameter family on the free 2-step algebra");
  for (std::size_t k = 0; k < 3; ++k)
    out.require(stored("ex2ev", k).isIntegrable(), "ex2ev structure " + std::to_string(k + 1));
  for (std::size_t k = 0; k < 2; ++k)
    out.require(stored("nilnonnilexam", k).isIntegrable(),
                "nilnonnilexam structure " + std::to_string(k + 1));
  for (std::size_t k = 0; k < 3; ++k)
    out.require(stored("exam322", k).isIntegrable(),
                "exam322 structure " + std::to_string(k + 1));
  return out;
}

// ---------------------------------------------------------------- criterion 3
// Invariance patterns of the ten dimensional examples.
Outcome criterion3() {
  Outcome out;
  {
    auto e = catalogGet("ex2ev");
    const auto& g = e.algebra;
    auto inv = [&](const ComplexStructure<Rational>& cs, const Subspace<Rational>& s) {
      return applyMatrix(cs.matrix(), s) == s;
    };
    ComplexStructure<Rational> j1(g, e.structures.at(0).matrix);
    out.require(inv(j1, g.derived()), "J1 should preserve the commutator");
    out.require(!inv(j1, g.centre()), "J1 should move the centre");
    out.require(j1.vSubspace() == g.derived(), "V(J1) should equal the commutator");
    ComplexStructure<Rational> j2(g, e.structures.at(1).matrix);
    out.require(inv(j2, g.centre()), "J2 should preserve the centre");
    out.require(!inv(j2, g.derived()), "J2 should move the commutator");
    out.require(j2.vSubspace().isZeroSpace(), "V(J2) should vanish");
    ComplexStructure<Rational> j3(g, e.structures.at(2).matrix);
    out.require(inv(j3, g.centre()) && inv(j3, g.derived()),
                "J3 should preserve both");
    out.require(j3.vSubspace().isZeroSpace(), "V(J3) should vanish");
  }
  {
    auto e = catalogGet("nilnonnilexam");
    const auto& g = e.algebra;
    ComplexStructure<Rational> j1(g, e.structures.at(0).matrix);
    ComplexStructure<Rational> j2(g, e.structures.at(1).matrix);
    auto v1 = j1.vSubspace();
    out.require(v1.isZeroSpace(),
                "V(J1) should vanish but has dimension " + std::to_string(v1.dim()));
    auto c1c2 = Subspace<Rational>::span(10, {g.basisVec(7), g.basisVec(8)});
    out.require(j2.vSubspace() == c1c2, "V(J2) should be the span of c1 and c2");
    out.require(j1.isNilpotentStructure(), "J1 should be nilpotent");
    out.require(!j2.isNilpotentStructure(), "J2 should not be nilpotent");
  }
  return out;
}

// ---------------------------------------------------------------- criterion 4
// The parameter family: its canonical ascending series fails rationality at
// the first nonzero term, while the specialization at 1/2 passes the full
// principal tower; the invariant part of the centre is the expected plane.
Outcome criterion4() {
  Outcome out;
  auto jt = storedFamily("badex");
  auto filt = jt.adaptedSeries();
  auto verdict = checkSeries(jt, filt);
  out.require(verdict.overall == SeriesKind::None, "family series should fail");
  out.require(verdict.firstFailure() == "rationality failed at step 2",
              "unexpected first failure: " + verdict.firstFailure());

  auto t = RationalFunction::t();
  Vec<RationalFunction> w1(6), w2(6);
  w1[4] = RationalFunction(Rational(1));
  w1[3] = t;
  w2[5] = RationalFunction(Rational(1));
  auto expected = Subspace<RationalFunction>::span(6, {w1, w2});
  auto inv = jt.largestInvariantInCentre();
  out.require(inv.dim() == 2, "invariant centre part should be a plane");
  out.require(inv == expected, "invariant centre part has unexpected basis");

  auto half = jt.specialize(ratFromLong(1, 2));
  auto fixedVerdict = checkSeries(half, half.adaptedSeries());
  out.require(fixedVerdict.overall == SeriesKind::Principal,
              "specialized series should be principal: " + fixedVerdict.firstFailure());
  return out;
}

// ---------------------------------------------------------------- criterion 5
// Classification rows: fibre dimension and base type for the six dimensional
// families, the stable-but-never-principal pairs, and the parameter
// dichotomy on the free 2-step algebra.
Outcome criterion5() {
  Outcome out;
  struct Row {
    const char* name;
    std::size_t fibre;
    const char* base;
  };
  const Row rows[] = {
      {"h1", 0, "torus"},   {"h2", 1, "torus"},   {"h3", 1, "torus"},
      {"h4", 1, "torus"},   {"h5", 1, "torus"},   {"h6", 1, "torus"},
      {"h8", 2, "elliptic"},{"h9", 1, "kodaira"}, {"h10", 1, "kodaira"},
      {"h11", 1, "kodaira"},{"h12", 1, "kodaira"},{"h13", 1, "kodaira"},
      {"h14", 1, "kodaira"},{"h15", 1, "kodaira"},{"h16", 1, "kodaira"},
  };
  auto kodaira = heisenberg(1, 1).fingerprint();
  for (const auto& row : rows) {
    auto cs = stored(row.name);
    auto proposal = proposeSeries(cs);
    if (!proposal || proposal->verdict.overall == SeriesKind::None) {
      out.require(false, std::string(row.name) + ": no series found");
      continue;
    }
    const auto& f = proposal->filtration;
    std::size_t fibre = f.size() == 2 ? 0 : f[1].dim() / 2;
    out.require(fibre == row.fibre,
                std::string(row.name) + ": fibre " + std::to_string(fibre));
    auto base = f.size() == 2 ? cs.algebra() : cs.algebra().quotientBy(f[1]).algebra;
    std::string kind;
    if (base.isAbelian())
      kind = base.dim() == 2 ? "elliptic" : "torus";
    else
      kind = base.fingerprint() == kodaira ? "kodaira" : "other";
    out.require(kind == row.base, std::string(row.name) + ": base " + kind);
  }

  for (const char* name : {"h19m", "h26p"}) {
    auto e = catalogGet(name);
    auto cs = stored(name);
    Subspace<Rational> mid = e.algebra.derived();
    if (std::string(name) == "h19m") {
      std::vector<Vec<Rational>> gens;
      for (std::size_t k : {1, 3, 4, 5}) gens.push_back(e.algebra.basisVec(k));
      mid = Subspace<Rational>::span(6, gens);
    }
    std::vector<Subspace<Rational>> f{Subspace<Rational>::zero(6), mid,
                                      e.algebra.fullSpace()};
    auto verdict = checkSeries(cs, f);
    out.require(verdict.overall == SeriesKind::TorusBundle,
                std::string(name) + ": series not a torus bundle");
    out.require(verdict.firstFailure().rfind("centrality", 0) == 0,
                std::string(name) + ": centrality should be the only failure");
    Rng rng(20260823);
    auto sampler = [&]() { return sampleStructure(e, rng); };
    auto report = stabilitySample(f, sampler, 8, SeriesKind::TorusBundle);
    out.require(!report.counterexample.has_value(),
                std::string(name) + ": conjugated sample broke the series");
  }

  auto proposal0 = proposeSeries(stored("h7"));
  out.require(proposal0 && proposal0->verdict.overall == SeriesKind::Principal &&
                  proposal0->filtration.size() == 4,
              "value 0 of the parameter should give a full principal tower");
  auto jt = storedFamily("badex");
  out.require(checkSeries(jt, jt.adaptedSeries()).overall == SeriesKind::None,
              "generic parameter should fail");
  return out;
}

// ---------------------------------------------------------------- criterion 6
// Conjugated samples on the Heisenberg family: abelian integrable structures
// whose ascending central series is a principal tower.
Outcome criterion6() {
  Outcome out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 2; ++m) {
      if ((2 * n + 1 + m) % 2 != 0) continue;
      std::string name = "heisenberg(" + std::to_string(n) + "," + std::to_string(m) + ")";
      auto e = catalogGet(name);
      auto filt = e.algebra.ascendingCentralSeries();
      Rng rng(4242 + 10 * n + m);
      for (int k = 0; k < 50; ++k) {
        auto cs = sampleStructure(e, rng);
        if (!cs) {
          out.require(false, name + ": sampler exhausted");
          break;
        }
        out.require(cs->isIntegrable(), name + ": sample not integrable");
        out.require(cs->isAbelianStructure(), name + ": sample not abelian");
        auto verdict = checkSeries(*cs, filt);
        out.require(verdict.overall == SeriesKind::Principal,
                    name + ": ascending series not principal");
        if (!out.ok) break;
      }
      if (!out.ok) return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- criterion 7
// Poincare symmetry of the invariant Betti numbers, the first Betti rule,
// row-wise vanishing Euler characteristics of the Hodge tables, and the
// pinned values for the fibred examples.
Outcome criterion7() {
  Outcome out;
  for (const auto& name : catalogNames()) {
    auto e = catalogGet(name);
    const auto& g = e.algebra;
    const std::size_t n = g.dim();
    if (n <= 10) {
      auto b = deRhamBetti(g);
      for (std::size_t k = 0; k <= n; ++k)
        out.require(b[k] == b[n - k], name + ": betti asymmetry at " + std::to_string(k));
      out.require(b[1] == n - g.derived().dim(), name + ": first betti rule");
    } else {
      CeComplex<Rational> ce(g);
      auto low = [&](std::size_t k) {
        std::size_t below = (k == 0) ? 0 : ce.differentialRank(k - 1);
        return choose(n, k) - ce.differentialRank(k) - below;
      };
      auto high = [&](std::size_t k) {
        std::size_t above = (k == n) ? 0 : ce.differentialRank(k);
        return choose(n, k) - ce.differentialRank(k - 1) - above;
      };
      for (std::size_t k = 0; k <= 2; ++k)
        out.require(low(k) == high(n - k),
                    name + ": betti asymmetry at " + std::to_string(k));
      out.require(low(1) == n - g.derived().dim(), name + ": first betti rule");
    }
    for (const auto& s : e.structures) {
      ComplexStructure<Rational> cs(g, s.matrix);
      DolbeaultComplex<Rational> dc(cs);
      if (n <= 10) {
        auto table = dc.hodgeTable();
        for (std::size_t p = 0; p < table.size(); ++p) {
          long euler = 0, sign = 1;
          for (auto h : table[p]) {
            euler += sign * static_cast<long>(h);
            sign = -sign;
          }
          out.require(euler == 0, name + "." + s.name + ": row euler at p=" +
                                      std::to_string(p));
        }
      } else {
        out.require(dc.hodgeNumber(0, 0) == 1, name + "." + s.name + ": h00");
        std::size_t h10 = dc.hodgeNumber(1, 0), h01 = dc.hodgeNumber(0, 1);
        std::size_t h20 = dc.hodgeNumber(2, 0), h11 = dc.hodgeNumber(1, 1),
                    h02 = dc.hodgeNumber(0, 2);
        out.require(h10 + h01 > 0 && h20 + h11 + h02 > 0,
                    name + "." + s.name + ": degenerate corner");
      }
    }
  }

  auto toc = catalogGet("torus_over_curve(3)");
  auto bToc = deRhamBetti(toc.algebra);
  out.require(bToc[1] == 7, "curve fibration first betti");
  DolbeaultComplex<Rational> dcToc(
      ComplexStructure<Rational>(toc.algebra, toc.structures.front().matrix));
  out.require(dcToc.closedHolomorphicOneForms().dim() == 3,
              "curve fibration closed holomorphic forms");

  for (std::size_t m : {2, 3}) {
    auto g = LieAlgebra<Rational>::abelian(2 * m);
    DolbeaultComplex<Rational> dc(
        ComplexStructure<Rational>(g, standardAlmostComplexMatrix<Rational>(2 * m)));
    out.require(dc.valuedDolbeaultDims()[1] == m * m,
                "torus tangent valued dimension at m=" + std::to_string(m));
  }
  return out;
}

// ---------------------------------------------------------------- criterion 8
// Randomized oracle agreement: the two integrability routes, the two largest
// invariant subspace routes, and the three closed holomorphic form routes.
// Each library call below compares its routes internally and throws on any
// disagreement.
Outcome criterion8() {
  Outcome out;
  Rng rng(0xACCE55);
  std::size_t integrableHits = 0;
  for (const auto& name : catalogNames()) {
    auto e = catalogGet(name);
    for (int k = 0; k < 100; ++k) {
      auto cs = randomAlmostComplex(rng, e.algebra, 2);
      try {
        if (cs.isIntegrable()) ++integrableHits;
      } catch (const OracleDisagreement& ex) {
        out.require(false, name + ": " + ex.what());
        return out;
      }
    }
  }

  std::size_t pairs = 0;
  while (pairs < 200) {
    for (const auto& name : catalogNames()) {
      if (pairs >= 200) break;
      auto e = catalogGet(name);
      const std::size_t n = e.algebra.dim();
      auto cs = randomAlmostComplex(rng, e.algebra, 2);
      auto v = randomSubspace<Rational>(rng, n, 1 + rng.index(n), 2);
      try {
        auto w = cs.largestInvariant(v);
        out.require(v.contains(w), name + ": invariant part escapes its bound");
      } catch (const OracleDisagreement& ex) {
        out.require(false, name + ": " + ex.what());
        return out;
      }
      ++pairs;
    }
  }

  struct Pin {
    const char* name;
    std::size_t which;
    std::size_t dim;
  };
  const Pin pins[] = {
      {"h1", 0, 3},    {"h2", 0, 2},     {"h3", 0, 2},     {"h4", 0, 2},
      {"h5", 0, 2},    {"h6", 0, 2},     {"h7", 0, 1},     {"h8", 0, 2},
      {"h9", 0, 1},    {"h10", 0, 1},    {"h11", 0, 1},    {"h12", 0, 1},
      {"h13", 0, 1},   {"h14", 0, 1},    {"h15", 0, 1},    {"h16", 0, 1},
      {"h19m", 0, 1},  {"h26p", 0, 1},   {"badex", 0, 1},  {"badmtbs", 0, 3},
      {"ex2ev", 0, 4}, {"ex2ev", 1, 3},  {"ex2ev", 2, 4},  {"nilnonnilexam", 0, 3},
      {"nilnonnilexam", 1, 3},           {"exam322", 0, 2}, {"exam322", 1, 1},
      {"exam322", 2, 2},{"dim18", 0, 7}, {"dim18", 1, 6},  {"dim18", 2, 7},
  };
  for (const auto& pin : pins) {
    DolbeaultComplex<Rational> dc(stored(pin.name, pin.which));
    std::size_t d = dc.closedHolomorphicOneForms().dim();
    out.require(d == pin.dim, std::string(pin.name) + " structure " +
                                  std::to_string(pin.which + 1) +
                                  ": closed forms " + std::to_string(d));
  }
  out.require(integrableHits < 100, "random structures are suspiciously integrable");
  return out;
}

// ---------------------------------------------------------------- criterion 9
// Tuple notation round trips, the swapped-index terms, and a fuzz sweep that
// must never crash the parser.
Outcome criterion9() {
  Outcome out;
  std::size_t tuples = 0;
  for (const auto& name : catalogNames()) {
    auto e = catalogGet(name);
    if (e.tuple.empty() || e.algebra.dim() != 6) continue;
    ++tuples;
    auto parsed = parseSalamon(e.tuple);
    auto canon = toSalamon(parsed);
    auto reparsed = parseSalamon(canon);
    bool same = parsed.dim() == reparsed.dim();
    for (std::size_t i = 0; same && i < 6; ++i)
      for (std::size_t j = i + 1; same && j < 6; ++j)
        same = parsed.basisBracket(i, j) == reparsed.basisBracket(i, j);
    out.require(same, name + ": tuple round trip changed the brackets");
  }
  out.require(tuples == 19, "expected 19 six dimensional tuples, saw " +
                                std::to_string(tuples));

  auto h5 = parseSalamon("(0,0,0,0,13+42,14+23)");
  out.require(h5.structureConstant(1, 3, 4) == Rational(1),
              "swapped pair should contribute with positive sign");
  auto h14 = catalogGet("h14");
  out.require(parseSalamon(h14.tuple).fingerprint() == h14.algebra.fingerprint(),
              "swapped pair entry mismatch");

  const std::string charset = "(),0123456789+-ti^*/ [].=dQfe\n#";
  Rng rng(0xF0552);
  for (int iter = 0; iter < 10000; ++iter) {
    std::string s;
    std::size_t len = rng.index(48);
    for (std::size_t k = 0; k < len; ++k) s.push_back(charset[rng.index(charset.size())]);
    try {
      parseSalamon(s);
    } catch (const Error&) {
    }
    try {
      parseExtended(s);
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* what;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"catalog construction passes both structure constant oracles", 5.0, criterion1},
      {"worked complex structures are integrable on both routes", 2.0, criterion2},
      {"invariance patterns of the ten dimensional examples", 60.0, criterion3},
      {"parameter family dichotomy: generic failure, rational fix", 60.0, criterion4},
      {"classification rows, stable series, parameter tower", 30.0, criterion5},
      {"conjugated Heisenberg samples stay abelian and principal", 60.0, criterion6},
      {"Betti symmetry, Hodge row Euler, fibred pins", 60.0, criterion7},
      {"randomized dual route agreement and closed form pins", 60.0, criterion8},
      {"tuple notation round trips and parser fuzz", 30.0, criterion9},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].run();
    } catch (const std::exception& ex) {
      out.ok = false;
      out.detail = std::string("unexpected exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[k].budget) {
      out.ok = false;
      if (!out.detail.empty()) out.detail += "; ";
      out.detail += "over time budget of " + std::to_string(criteria[k].budget) + "s";
    }
    std::printf("%s criterion %zu: %s (%.2fs)%s%s%s\n", out.ok ? "PASS" : "FAIL",
                k + 1, criteria[k].what, secs, out.detail.empty() ? "" : " [",
                out.detail.c_str(), out.detail.empty() ? "" : "]");
    if (!out.ok) ++failures;
  }
  return failures;
}
