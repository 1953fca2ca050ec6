#ifndef NILCX_BUNDLE_SERIES_HPP
#define NILCX_BUNDLE_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/complex_structure.hpp"

namespace nilcx {

enum class SeriesKind { None, TorusBundle, Principal };

inline const char* toString(SeriesKind k) {
  switch (k) {
    case SeriesKind::None: return "none";
    case SeriesKind::TorusBundle: return "torus_bundle";
    case SeriesKind::Principal: return "principal_torus_bundle";
  }
  return "none";
}

/// Verdict for one nonzero term S^j of an ascending filtration.
struct SeriesStepVerdict {
  bool rational = false;
  bool jInvariant = false;
  /// [S^j, S^{j+1}] inside S^j; vacuous at the top term.
  bool idealInNext = false;
  /// [S^j, S^j] inside S^{j-1}.
  bool quotientAbelian = false;
  /// [S^j, g] inside S^{j-1}; the principal bundle condition.
  bool centralInQuotient = false;

  bool torusBundleOk() const {
    return rational && jInvariant && idealInNext && quotientAbelian;
  }
  bool principalOk() const { return torusBundleOk() && centralInQuotient; }
};

struct SeriesVerdict {
  /// One entry per nonzero filtration term, in ascending order.
  std::vector<SeriesStepVerdict> steps;
  SeriesKind overall = SeriesKind::None;

  /// Human readable description of the first violated condition, phrased with
  /// 1-based positions in the full filtration list (the zero term is
  /// position 1).  Empty when the series is a principal one.
  std::string firstFailure() const {
    for (std::size_t j = 0; j < steps.size(); ++j) {
      std::string at = " failed at step " + std::to_string(j + 2);
      if (!steps[j].rational) return "rationality" + at;
      if (!steps[j].jInvariant) return "J-invariance" + at;
      if (!steps[j].idealInNext) return "ideal condition" + at;
      if (!steps[j].quotientAbelian) return "abelian quotient" + at;
    }
    for (std::size_t j = 0; j < steps.size(); ++j)
      if (!steps[j].centralInQuotient)
        return "centrality failed at step " + std::to_string(j + 2);
    return "";
  }
};

/// Conditions of a (principal) torus bundle series, checked exactly for each
/// term: rationality, J invariance, the ideal condition towards the next
/// term, abelian successive quotients, and centrality of the quotients.
template <class F>
SeriesVerdict checkSeries(const ComplexStructure<F>& cs,
                          const std::vector<Subspace<F>>& filtration) {
  const auto& g = cs.algebra();
  const std::size_t n = g.dim();
  if (filtration.size() < 2) throw BadFiltration("need at least 0 and g");
  if (!filtration.front().isZeroSpace())
    throw BadFiltration("filtration must start at 0");
  if (!filtration.back().isFull()) throw BadFiltration("filtration must end at g");
  for (const auto& s : filtration)
    if (s.ambient() != n) throw BadFiltration("term has wrong ambient dimension");
  for (std::size_t j = 0; j + 1 < filtration.size(); ++j) {
    if (!filtration[j + 1].contains(filtration[j]) ||
        filtration[j + 1].dim() == filtration[j].dim())
      throw BadFiltration("terms must be strictly ascending");
  }
  SeriesVerdict verdict;
  Subspace<F> full = g.fullSpace();
  for (std::size_t j = 1; j < filtration.size(); ++j) {
    const Subspace<F>& prev = filtration[j - 1];
    const Subspace<F>& cur = filtration[j];
    SeriesStepVerdict step;
    step.rational = isRationalSubspace(cur);
    step.jInvariant = applyMatrix(cs.matrix(), cur) == cur;
    step.idealInNext =
        j + 1 >= filtration.size() ||
        cur.contains(g.subspaceBracket(cur, filtration[j + 1]));
    step.quotientAbelian = prev.contains(g.subspaceBracket(cur, cur));
    step.centralInQuotient = prev.contains(g.subspaceBracket(cur, full));
    verdict.steps.push_back(step);
  }
  bool torus = true, principal = true;
  for (const auto& s : verdict.steps) {
    torus = torus && s.torusBundleOk();
    principal = principal && s.principalOk();
  }
  verdict.overall = principal ? SeriesKind::Principal
                    : torus  ? SeriesKind::TorusBundle
                             : SeriesKind::None;
  return verdict;
}

template <class F>
struct SeriesProposal {
  std::vector<Subspace<F>> filtration;
  /// Which branch of the case analysis produced the candidate.
  std::string label;
  SeriesVerdict verdict;
};

/// Candidate filtration from the classification by
/// (dim C1, step, dim Z, dim C1 cap Z): trivial series for abelian algebras,
/// the ascending central series for derived dimension one and for the
/// maximal-step cases with derived dimension two or three, the two-term
/// series through C1 or Z for 2-step algebras with small derived dimension,
/// the tower 0 < C1 cap Z < Z^2 < g for derived dimension three, and the
/// adapted series of a nilpotent structure as fallback.  Every candidate is
/// re-validated; nothing is returned when all candidates fail.
template <class F>
std::optional<SeriesProposal<F>> proposeSeries(const ComplexStructure<F>& cs) {
  const auto& g = cs.algebra();
  if (!cs.isIntegrable()) throw NotIntegrable();
  const std::size_t n = g.dim();
  auto asc = g.ascendingCentralSeries();
  Subspace<F> derived = g.derived();
  Subspace<F> centre = asc.size() > 1 ? asc[1] : g.fullSpace();
  std::size_t c1 = derived.dim();
  std::size_t step = g.step();
  std::size_t zdim = centre.dim();
  std::size_t czdim = derived.intersect(centre).dim();

  std::vector<std::pair<std::vector<Subspace<F>>, std::string>> candidates;
  auto two = [&](const Subspace<F>& mid) {
    return std::vector<Subspace<F>>{Subspace<F>::zero(n), mid, g.fullSpace()};
  };
  if (c1 == 0) {
    candidates.push_back(
        {{Subspace<F>::zero(n), g.fullSpace()}, "torus"});
  } else if (c1 == 1) {
    candidates.push_back({asc, "ascending central series"});
  } else if (c1 == 2) {
    if (step == 3) {
      candidates.push_back({asc, "ascending central series"});
    } else if (step == 2) {
      candidates.push_back({two(derived), "derived then full"});
      if (zdim % 2 == 0 && zdim >= 4)
        candidates.push_back({two(centre), "centre then full"});
    }
  } else if (c1 == 3) {
    if (step == 4) {
      candidates.push_back({asc, "ascending central series"});
    } else if (step == 3 && czdim == 2 && asc.size() > 2) {
      candidates.push_back(
          {{Subspace<F>::zero(n), derived.intersect(centre), asc[2],
            g.fullSpace()},
           "centre intersection tower"});
    }
  }
  auto tSeries = cs.adaptedSeries();
  if (tSeries.back().isFull() && tSeries.size() >= 2)
    candidates.push_back({tSeries, "adapted series"});

  SeriesProposal<F> best;
  bool haveBest = false;
  for (auto& cand : candidates) {
    SeriesVerdict v = checkSeries(cs, cand.first);
    if (v.overall == SeriesKind::None) continue;
    if (!haveBest || (v.overall == SeriesKind::Principal &&
                      best.verdict.overall != SeriesKind::Principal)) {
      best = SeriesProposal<F>{std::move(cand.first), cand.second, std::move(v)};
      haveBest = true;
    }
    if (best.verdict.overall == SeriesKind::Principal) break;
  }
  if (!haveBest) return std::nullopt;
  return best;
}

template <class F>
struct StabilityCounterexample {
  Matrix<F> structureMatrix;
  SeriesVerdict verdict;
};

template <class F>
struct StabilityReport {
  std::size_t samplesChecked = 0;
  std::optional<StabilityCounterexample<F>> counterexample;
  /// Sampling can refute but never prove the universally quantified claim.
  static const char* disclaimer() {
    return "absence of a counterexample among sampled structures is evidence, "
           "not proof";
  }
};

/// Tests a fixed filtration against sampled complex structures.  The sampler
/// is called until it either produced `count` structures or returns nothing,
/// in which case SamplerExhausted is thrown.  A returned counterexample
/// carries the verdict that genuinely violates the required kind.
template <class F, class Sampler>
StabilityReport<F> stabilitySample(const std::vector<Subspace<F>>& filtration,
                                   Sampler&& next, std::size_t count,
                                   SeriesKind required = SeriesKind::TorusBundle) {
  StabilityReport<F> report;
  for (std::size_t k = 0; k < count; ++k) {
    std::optional<ComplexStructure<F>> j = next();
    if (!j)
      throw SamplerExhausted("sampler gave up after " +
                             std::to_string(report.samplesChecked) +
                             " structures");
    SeriesVerdict v = checkSeries(*j, filtration);
    ++report.samplesChecked;
    bool ok = required == SeriesKind::Principal
                  ? v.overall == SeriesKind::Principal
                  : v.overall != SeriesKind::None;
    if (!ok) {
      report.counterexample =
          StabilityCounterexample<F>{j->matrix(), std::move(v)};
      return report;
    }
  }
  return report;
}

template <class F>
struct AlbaneseResult {
  /// Smallest J invariant rational subspace containing the derived algebra.
  Subspace<F> w;
  std::size_t dimAlb = 0;
  /// False when w is all of g and the quotient collapses.
  bool proper = false;
};

/// Fixpoint of alternately closing under J and taking the rational hull,
/// starting from the derived subalgebra; the Albanese quotient dimension is
/// half the codimension of the fixpoint.
template <class F>
AlbaneseResult<F> albaneseDimension(const ComplexStructure<F>& cs) {
  if (!cs.isIntegrable()) throw NotIntegrable();
  const std::size_t n = cs.algebra().dim();
  Subspace<F> w = cs.algebra().derived();
  for (std::size_t iter = 0; iter <= n + 1; ++iter) {
    Subspace<F> next = rationalHull(cs.jClosure(w));
    if (next == w) {
      if ((n - w.dim()) % 2 != 0)
        throw OracleDisagreement("albanese fixpoint has odd codimension");
      AlbaneseResult<F> out;
      out.w = std::move(w);
      out.dimAlb = (n - out.w.dim()) / 2;
      out.proper = !out.w.isFull();
      return out;
    }
    if (next.dim() <= w.dim())
      throw OracleDisagreement("albanese iteration failed to grow");
    w = std::move(next);
  }
  throw Error("albanese fixpoint did not terminate");
}

}  // namespace nilcx

#endif
