#ifndef NILCX_COMPLEX_STRUCTURE_HPP
#define NILCX_COMPLEX_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilcx/lie_algebra.hpp"

namespace nilcx {

/// Almost complex structure on a Lie algebra over a real exact field,
/// given by a matrix J with J^2 = -Id.  Integrability and the derived
/// classification flags are each computed along two independent routes and
/// compared.
template <class F>
class ComplexStructure {
 public:
  using C = typename FieldInfo<F>::Complexified;

  ComplexStructure(LieAlgebra<F> algebra, Matrix<F> j)
      : g_(std::move(algebra)), j_(std::move(j)) {
    const std::size_t n = g_.dim();
    if (j_.rows() != n || j_.cols() != n)
      throw DimensionMismatch("structure matrix shape");
    if (n % 2 != 0)
      throw DimensionMismatch("almost complex structure needs even dimension");
    if (j_ * j_ != -Matrix<F>::identity(n))
      throw Error("not an almost complex structure: J^2 differs from -Id");
  }

  const LieAlgebra<F>& algebra() const { return g_; }
  const Matrix<F>& matrix() const { return j_; }
  std::size_t dim() const { return g_.dim(); }

  Vec<F> applyJ(const Vec<F>& x) const { return j_.apply(x); }

  /// N(x, y) = [Jx, Jy] - [x, y] - J[Jx, y] - J[x, Jy].
  Vec<F> nijenhuis(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> jx = applyJ(x), jy = applyJ(y);
    Vec<F> out = g_.bracket(jx, jy);
    axpyVec2(out, g_.bracket(x, y));
    axpyVec2(out, applyJ(g_.bracket(jx, y)));
    axpyVec2(out, applyJ(g_.bracket(x, jy)));
    return out;
  }

  /// The +i eigenspace of J on the complexification, spanned by e_k - i Je_k.
  Subspace<C> holomorphicSpace() const {
    const std::size_t n = g_.dim();
    std::vector<Vec<C>> gens;
    for (std::size_t k = 0; k < n; ++k) {
      Vec<F> e = g_.basisVec(k);
      Vec<F> je = applyJ(e);
      Vec<C> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = C(e[r], F(-je[r]));
      gens.push_back(std::move(v));
    }
    auto p = Subspace<C>::span(n, gens);
    if (p.dim() != n / 2)
      throw OracleDisagreement("holomorphic space dimension");
    return p;
  }

  Subspace<C> antiholomorphicSpace() const {
    return conjugateSubspace(holomorphicSpace());
  }

  /// Vanishing of the Nijenhuis tensor, cross-checked against closure of the
  /// +i eigenspace under the complexified bracket.
  bool isIntegrable() const {
    bool direct = true;
    const std::size_t n = g_.dim();
    for (std::size_t i = 0; i < n && direct; ++i)
      for (std::size_t j = i + 1; j < n && direct; ++j)
        if (!isZeroVec(nijenhuis(g_.basisVec(i), g_.basisVec(j)))) direct = false;
    bool viaSubalgebra = isBracketClosed(holomorphicSpace());
    if (direct != viaSubalgebra)
      throw OracleDisagreement("integrability routes disagree");
    return direct;
  }

  /// [Jx, Jy] = [x, y] for all x, y; cross-checked against the +i eigenspace
  /// being an abelian subalgebra.
  bool isAbelianStructure() const {
    bool direct = true;
    const std::size_t n = g_.dim();
    for (std::size_t i = 0; i < n && direct; ++i)
      for (std::size_t j = i + 1; j < n && direct; ++j) {
        Vec<F> lhs = g_.bracket(applyJ(g_.basisVec(i)), applyJ(g_.basisVec(j)));
        axpyVec2(lhs, g_.basisBracket(i, j));
        if (!isZeroVec(lhs)) direct = false;
      }
    auto gc = g_.complexify();
    auto p = holomorphicSpace();
    bool viaSubalgebra = gc.subspaceBracket(p, p).isZeroSpace();
    if (direct != viaSubalgebra)
      throw OracleDisagreement("abelian structure routes disagree");
    return direct;
  }

  /// ad_x commutes with J for every x; cross-checked against the vanishing of
  /// brackets between the +i and -i eigenspaces.
  bool isParallelisableStructure() const {
    bool direct = true;
    const std::size_t n = g_.dim();
    for (std::size_t i = 0; i < n && direct; ++i) {
      Matrix<F> ad = g_.adjoint(g_.basisVec(i));
      if (ad * j_ != j_ * ad) direct = false;
    }
    auto gc = g_.complexify();
    bool viaEigenspaces =
        gc.subspaceBracket(holomorphicSpace(), antiholomorphicSpace()).isZeroSpace();
    if (direct != viaEigenspaces)
      throw OracleDisagreement("parallelisable structure routes disagree");
    return direct;
  }

  /// Smallest J invariant subspace containing u.
  Subspace<F> jClosure(const Subspace<F>& u) const {
    return u + applyMatrix(j_, u);
  }

  /// Largest J invariant subspace contained in u, computed as the
  /// intersection with Ju and cross-checked through the eigenspace splitting
  /// of its complexification.
  Subspace<F> largestInvariant(const Subspace<F>& u) const {
    Subspace<F> direct = u.intersect(applyMatrix(j_, u));
    auto uc = complexifySubspace(u);
    auto plus = uc.intersect(holomorphicSpace());
    auto viaSplit = realPoints(plus + conjugateSubspace(plus));
    if (direct != viaSplit)
      throw OracleDisagreement("largest invariant subspace routes disagree");
    return direct;
  }

  Subspace<F> largestInvariantInCentre() const {
    return largestInvariant(g_.centre());
  }

  /// Ascending series 0 = a_0 inside a_1 inside ...; a_{k+1} is the largest
  /// J invariant subspace of {x : [x, g] inside a_k}.  The series is returned
  /// up to its stabilisation point; it ends at g exactly when the structure
  /// is nilpotent.
  std::vector<Subspace<F>> adaptedSeries() const {
    std::vector<Subspace<F>> series{Subspace<F>::zero(g_.dim())};
    for (;;) {
      Subspace<F> z = g_.centralizerModulo(series.back());
      Subspace<F> next = z.intersect(applyMatrix(j_, z));
      if (next == series.back()) break;
      if (!next.contains(series.back()))
        throw OracleDisagreement("adapted series is not ascending");
      series.push_back(std::move(next));
    }
    return series;
  }

  bool isNilpotentStructure() const { return adaptedSeries().back().isFull(); }

  /// Descending J closures of the descending central series.
  std::vector<Subspace<F>> cJSeries() const {
    std::vector<Subspace<F>> series;
    for (const auto& c : g_.descendingCentralSeries()) {
      Subspace<F> cj = jClosure(c);
      if (!cj.contains(c))
        throw OracleDisagreement("J closure lost its argument");
      series.push_back(std::move(cj));
    }
    return series;
  }

  struct VSeriesStep {
    /// Z_J g intersected with the i-th descending central term.
    Subspace<F> w;
    /// [w, g]; J invariant by construction.
    Subspace<F> v;
  };

  /// Steps (W_i, V_{i+1}) for i = 0 .. step, where W_i = (Zg + JZg) cap C^i g
  /// and V_{i+1} = [W_i, g].  Each V is checked J invariant and the sequence
  /// decreasing.
  std::vector<VSeriesStep> vSeries() const {
    Subspace<F> zj = jClosure(g_.centre());
    std::vector<VSeriesStep> steps;
    for (const auto& c : g_.descendingCentralSeries()) {
      VSeriesStep step;
      step.w = zj.intersect(c);
      step.v = g_.subspaceBracket(step.w, g_.fullSpace());
      if (!(applyMatrix(j_, step.v) == step.v))
        throw OracleDisagreement("V series term is not J invariant");
      if (!steps.empty() && !steps.back().v.contains(step.v))
        throw OracleDisagreement("V series is not decreasing");
      steps.push_back(std::move(step));
    }
    return steps;
  }

  /// V^J = [Zg + JZg, g]; zero exactly when the centre is J invariant.
  Subspace<F> vSubspace() const { return vSeries().front().v; }

  struct Classification {
    bool integrable = false;
    bool abelian = false;
    bool parallelisable = false;
    bool nilpotent = false;
  };

  Classification classify() const {
    Classification c;
    c.integrable = isIntegrable();
    c.abelian = isAbelianStructure();
    c.parallelisable = isParallelisableStructure();
    c.nilpotent = isNilpotentStructure();
    if ((c.abelian || c.parallelisable) && !c.integrable)
      throw OracleDisagreement("special structure type on a non-integrable J");
    return c;
  }

  ComplexStructure<typename FieldInfo<F>::Specialized> specialize(
      const Rational& at) const {
    return ComplexStructure<typename FieldInfo<F>::Specialized>(
        g_.specialize(at), specializeMatrix(j_, at));
  }

  /// Real vectors x_1 .. x_m with g = span{x_i} + span{J x_i}; prefers
  /// standard basis vectors.
  std::vector<Vec<F>> adaptedRealBasis() const {
    const std::size_t n = g_.dim();
    std::vector<Vec<F>> picks;
    Subspace<F> covered = Subspace<F>::zero(n);
    for (std::size_t k = 0; k < n && !covered.isFull(); ++k) {
      Vec<F> e = g_.basisVec(k);
      if (covered.contains(e)) continue;
      covered = covered + Subspace<F>::span(n, {e, applyJ(e)});
      picks.push_back(std::move(e));
    }
    if (picks.size() != n / 2 || !covered.isFull())
      throw OracleDisagreement("adapted basis construction");
    return picks;
  }

  /// Invertible complex matrix whose first m columns are x_k - i J x_k and
  /// last m columns their conjugates.
  Matrix<C> adaptedFrame() const {
    const std::size_t n = g_.dim();
    const std::size_t m = n / 2;
    std::vector<Vec<F>> xs = adaptedRealBasis();
    Matrix<C> frame(n, n);
    for (std::size_t k = 0; k < m; ++k) {
      Vec<F> jx = applyJ(xs[k]);
      for (std::size_t r = 0; r < n; ++r) {
        frame.at(r, k) = C(xs[k][r], F(-jx[r]));
        frame.at(r, m + k) = C(xs[k][r], jx[r]);
      }
    }
    return frame;
  }

 private:
  static void axpyVec2(Vec<F>& a, const Vec<F>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  }

  bool isBracketClosed(const Subspace<C>& s) const {
    auto gc = g_.complexify();
    return s.contains(gc.subspaceBracket(s, s));
  }

  LieAlgebra<F> g_;
  Matrix<F> j_;
};

/// Builds the almost complex structure whose +i eigenspace is the given
/// subspace, when that subspace meets its conjugate trivially and the
/// resulting matrix is real.  Returns nothing when the subspace fails either
/// condition.
template <class F>
std::optional<ComplexStructure<F>> structureFromHolomorphicSpace(
    const LieAlgebra<F>& g, const Subspace<Gaussian<F>>& p) {
  using C = Gaussian<F>;
  const std::size_t n = g.dim();
  const std::size_t m = n / 2;
  if (n % 2 != 0 || p.ambient() != n || p.dim() != m) return std::nullopt;
  auto pbar = conjugateSubspace(p);
  if (!p.intersect(pbar).isZeroSpace()) return std::nullopt;
  Matrix<C> frame(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    const Vec<C>& u = p.basis()[k];
    for (std::size_t r = 0; r < n; ++r) {
      frame.at(r, k) = u[r];
      frame.at(r, m + k) = conjScalar(u[r]);
    }
  }
  auto inv = frame.inverse();
  if (!inv) return std::nullopt;
  Matrix<C> d(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    d.at(k, k) = C::i();
    d.at(m + k, m + k) = C(F{}, F(-scalarOne<F>()));
  }
  Matrix<C> jc = frame * d * *inv;
  Matrix<F> j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (!isZero(jc.at(r, c).im)) return std::nullopt;
      j.at(r, c) = jc.at(r, c).re;
    }
  return ComplexStructure<F>(g, std::move(j));
}

}  // namespace nilcx

#endif
