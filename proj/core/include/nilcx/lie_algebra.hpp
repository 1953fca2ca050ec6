#ifndef NILCX_LIE_ALGEBRA_HPP
#define NILCX_LIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcx/subspace.hpp"

namespace nilcx {

/// Finite dimensional Lie algebra given by structure constants over an exact
/// field.  Basis brackets are stored for index pairs i < j (zero based); the
/// Jacobi identity is verified on construction unless the unchecked factory
/// is used.
template <class F>
class LieAlgebra {
 public:
  struct Entry {
    std::size_t i = 0;
    std::size_t j = 0;
    Vec<F> value;
  };

  LieAlgebra(std::size_t n, const std::vector<Entry>& entries)
      : LieAlgebra(n, entries, true) {}

  static LieAlgebra unchecked(std::size_t n, const std::vector<Entry>& entries) {
    return LieAlgebra(n, entries, false);
  }

  static LieAlgebra abelian(std::size_t n) { return LieAlgebra(n, {}); }

  std::size_t dim() const { return n_; }

  /// [e_i, e_j] for i < j.
  const Vec<F>& basisBracket(std::size_t i, std::size_t j) const {
    return table_[pairIndex(i, j)];
  }

  /// [e_i, e_j] for arbitrary index order.
  Vec<F> bracketOfBasis(std::size_t i, std::size_t j) const {
    if (i == j) return zeroVec<F>(n_);
    if (i < j) return basisBracket(i, j);
    Vec<F> v = basisBracket(j, i);
    for (auto& x : v) x = F(-x);
    return v;
  }

  /// Coefficient of e_k in [e_i, e_j].
  F structureConstant(std::size_t i, std::size_t j, std::size_t k) const {
    if (i == j) return F{};
    if (i < j) return basisBracket(i, j)[k];
    return F(-basisBracket(j, i)[k]);
  }

  Vec<F> bracket(const Vec<F>& x, const Vec<F>& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bracket arguments");
    Vec<F> out = zeroVec<F>(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        F c = F(x[i] * y[j] - x[j] * y[i]);
        if (isZero(c)) continue;
        axpyVec(out, F(-c), basisBracket(i, j));
      }
    return out;
  }

  /// Matrix of ad_x = [x, .].
  Matrix<F> adjoint(const Vec<F>& x) const {
    Matrix<F> m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Vec<F> e = zeroVec<F>(n_);
      e[j] = scalarOne<F>();
      Vec<F> col = bracket(x, e);
      for (std::size_t r = 0; r < n_; ++r) m.at(r, j) = col[r];
    }
    return m;
  }

  bool jacobiHolds(std::string* witness = nullptr) const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        for (std::size_t k = j + 1; k < n_; ++k) {
          Vec<F> s = bracket(bracketOfBasis(i, j), basisVec(k));
          s = addVec(std::move(s), bracket(bracketOfBasis(j, k), basisVec(i)));
          s = addVec(std::move(s), bracket(bracketOfBasis(k, i), basisVec(j)));
          if (!isZeroVec(s)) {
            if (witness)
              *witness = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "," + std::to_string(k + 1) + ")";
            return false;
          }
        }
    return true;
  }

  /// span{[a, b] : a in A, b in B} for basis vectors a, b.
  Subspace<F> subspaceBracket(const Subspace<F>& a, const Subspace<F>& b) const {
    std::vector<Vec<F>> gens;
    for (const auto& x : a.basis())
      for (const auto& y : b.basis()) gens.push_back(bracket(x, y));
    return Subspace<F>::span(n_, gens);
  }

  Subspace<F> fullSpace() const { return Subspace<F>::full(n_); }

  Subspace<F> derived() const { return subspaceBracket(fullSpace(), fullSpace()); }

  /// {x : [x, g] inside s}.
  Subspace<F> centralizerModulo(const Subspace<F>& s) const {
    if (s.ambient() != n_) throw AmbientMismatch("centralizerModulo");
    Subspace<F> ann = annihilator(s);
    std::vector<Vec<F>> rows;
    for (std::size_t j = 0; j < n_; ++j) {
      Matrix<F> adj = adjointOfBasisTransposed(j);
      for (const auto& a : ann.basis()) rows.push_back(adj.apply(a));
    }
    if (rows.empty()) return fullSpace();
    return Subspace<F>::span(n_, Matrix<F>::fromRows(rows).kernelBasis());
  }

  Subspace<F> centre() const { return centralizerModulo(Subspace<F>::zero(n_)); }

  /// g = C^0 over C^1 = [g, g] over ... down to 0; throws NotNilpotent if the
  /// series stabilises before reaching zero.
  std::vector<Subspace<F>> descendingCentralSeries() const {
    std::vector<Subspace<F>> series{fullSpace()};
    while (!series.back().isZeroSpace()) {
      Subspace<F> next = subspaceBracket(fullSpace(), series.back());
      if (next == series.back()) throw NotNilpotent();
      series.push_back(std::move(next));
    }
    return series;
  }

  /// 0 = Z^0 inside Z^1 = centre inside ... up to g; throws NotNilpotent if
  /// the series stabilises before reaching g.
  std::vector<Subspace<F>> ascendingCentralSeries() const {
    std::vector<Subspace<F>> series{Subspace<F>::zero(n_)};
    while (!series.back().isFull()) {
      Subspace<F> next = centralizerModulo(series.back());
      if (next == series.back()) throw NotNilpotent();
      series.push_back(std::move(next));
    }
    return series;
  }

  std::size_t step() const { return descendingCentralSeries().size() - 1; }

  bool isAbelian() const {
    for (const auto& v : table_)
      if (!isZeroVec(v)) return false;
    return true;
  }

  bool isNilpotent() const {
    try {
      descendingCentralSeries();
      return true;
    } catch (const NotNilpotent&) {
      return false;
    }
  }

  bool isIdeal(const Subspace<F>& s) const {
    return s.contains(subspaceBracket(fullSpace(), s));
  }

  /// The algebra induced on a subspace closed under the bracket, in the basis
  /// of the subspace.
  LieAlgebra restrictTo(const Subspace<F>& s) const {
    if (s.ambient() != n_) throw AmbientMismatch("restrictTo");
    std::size_t m = s.dim();
    std::vector<Entry> entries;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        Vec<F> v = bracket(s.basis()[a], s.basis()[b]);
        auto coords = s.coordinates(v);
        if (!coords) throw Error("subspace is not closed under the bracket");
        entries.push_back({a, b, std::move(*coords)});
      }
    return LieAlgebra(m, entries);
  }

  struct Quotient {
    LieAlgebra algebra;
    /// Coordinates in the quotient basis of the class of x.
    Matrix<F> projection;
    /// Ambient coordinates whose standard vectors map to the quotient basis.
    std::vector<std::size_t> complementCoords;
  };

  Quotient quotientBy(const Subspace<F>& ideal) const {
    if (ideal.ambient() != n_) throw AmbientMismatch("quotientBy");
    if (!isIdeal(ideal)) throw NotAnIdeal();
    std::vector<std::size_t> cc = ideal.nonPivotCoordinates();
    std::size_t m = cc.size();
    Matrix<F> proj(m, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Vec<F> e = zeroVec<F>(n_);
      e[j] = scalarOne<F>();
      Vec<F> r = ideal.reduce(e);
      for (std::size_t a = 0; a < m; ++a) proj.at(a, j) = r[cc[a]];
    }
    std::vector<Entry> entries;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b) {
        Vec<F> v = bracketOfBasis(cc[a], cc[b]);
        entries.push_back({a, b, proj.apply(v)});
      }
    return Quotient{LieAlgebra(m, entries), std::move(proj), std::move(cc)};
  }

  LieAlgebra<typename FieldInfo<F>::Complexified> complexify() const {
    using C = typename FieldInfo<F>::Complexified;
    std::vector<typename LieAlgebra<C>::Entry> entries;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        const Vec<F>& v = basisBracket(i, j);
        if (!isZeroVec(v)) entries.push_back({i, j, complexifyVec(v)});
      }
    return LieAlgebra<C>::unchecked(n_, entries);
  }

  LieAlgebra<typename FieldInfo<F>::Specialized> specialize(const Rational& at) const {
    using S = typename FieldInfo<F>::Specialized;
    std::vector<typename LieAlgebra<S>::Entry> entries;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        const Vec<F>& v = basisBracket(i, j);
        if (isZeroVec(v)) continue;
        Vec<S> w(n_);
        for (std::size_t k = 0; k < n_; ++k) w[k] = specializeScalar(v[k], at);
        entries.push_back({i, j, std::move(w)});
      }
    return LieAlgebra<S>(n_, entries);
  }

  /// The same algebra written in the basis given by the columns of p.  The
  /// Jacobi re-check can be skipped since a change of basis preserves it.
  LieAlgebra changeBasis(const Matrix<F>& p, bool check = true) const {
    if (p.rows() != n_ || p.cols() != n_)
      throw DimensionMismatch("change of basis matrix shape");
    auto pinv = p.inverse();
    if (!pinv) throw Error("change of basis matrix is singular");
    std::vector<Entry> entries;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) {
        Vec<F> v = pinv->apply(bracket(p.column(a), p.column(b)));
        if (!isZeroVec(v)) entries.push_back({a, b, std::move(v)});
      }
    return LieAlgebra(n_, entries, check);
  }

  /// Dimension data of both central series plus derived numbers; equality of
  /// fingerprints is the isomorphism test used for the small quotients that
  /// appear as fibres and bases.
  struct Fingerprint {
    std::size_t dim = 0;
    std::size_t step = 0;
    std::size_t derivedDim = 0;
    std::size_t centreDim = 0;
    std::size_t derivedCentreDim = 0;
    std::vector<std::size_t> descendingDims;
    std::vector<std::size_t> ascendingDims;
    bool operator==(const Fingerprint&) const = default;
  };

  Fingerprint fingerprint() const {
    Fingerprint fp;
    fp.dim = n_;
    auto desc = descendingCentralSeries();
    auto asc = ascendingCentralSeries();
    fp.step = desc.size() - 1;
    fp.derivedDim = desc.size() > 1 ? desc[1].dim() : 0;
    fp.centreDim = asc.size() > 1 ? asc[1].dim() : n_;
    if (desc.size() > 1 && asc.size() > 1)
      fp.derivedCentreDim = desc[1].intersect(asc[1]).dim();
    for (const auto& s : desc) fp.descendingDims.push_back(s.dim());
    for (const auto& s : asc) fp.ascendingDims.push_back(s.dim());
    return fp;
  }

  struct AdWitness {
    Vec<F> x;
    std::size_t rank = 0;
    std::size_t derivedDim = 0;
  };

  /// Searches for x with ad_x not surjective onto [g, g].  Only meaningful
  /// when the centre equals the derived subalgebra; otherwise throws
  /// HypothesisViolated.  Returns nothing when no witness was found among the
  /// candidates tried.
  std::optional<AdWitness> adSurjectivityRefuter(std::size_t tries = 256) const {
    if (!(centre() == derived()))
      throw HypothesisViolated("centre differs from the derived subalgebra");
    std::size_t target = derived().dim();
    std::size_t tried = 0;
    auto test = [&](const Vec<F>& x) -> std::optional<AdWitness> {
      ++tried;
      std::size_t r = adjoint(x).rank();
      if (r < target) return AdWitness{x, r, target};
      return std::nullopt;
    };
    for (std::size_t i = 0; i < n_ && tried < tries; ++i) {
      if (auto w = test(basisVec(i))) return w;
    }
    for (std::size_t i = 0; i < n_ && tried < tries; ++i)
      for (std::size_t j = i + 1; j < n_ && tried < tries; ++j)
        for (int sign = 0; sign < 2 && tried < tries; ++sign) {
          Vec<F> x = basisVec(i);
          const F one = scalarOne<F>();
          axpyVec(x, sign ? one : F(-one), basisVec(j));
          if (auto w = test(x)) return w;
        }
    return std::nullopt;
  }

  Vec<F> basisVec(std::size_t k) const {
    Vec<F> e = zeroVec<F>(n_);
    e[k] = scalarOne<F>();
    return e;
  }

 private:
  LieAlgebra(std::size_t n, const std::vector<Entry>& entries, bool check)
      : n_(n), table_(n * (n - 1) / 2, zeroVec<F>(n)) {
    if (n == 0) throw DimensionMismatch("zero dimensional algebra");
    std::vector<bool> seen(table_.size(), false);
    for (const auto& e : entries) {
      if (e.i >= e.j || e.j >= n_) throw DimensionMismatch("bracket entry indices");
      if (e.value.size() != n_) throw DimensionMismatch("bracket entry size");
      std::size_t idx = pairIndex(e.i, e.j);
      if (seen[idx]) throw Error("duplicate bracket entry");
      seen[idx] = true;
      table_[idx] = e.value;
    }
    if (check) {
      std::string witness;
      if (!jacobiHolds(&witness))
        throw JacobiFailure("Jacobi identity fails on basis triple " + witness);
    }
  }

  std::size_t pairIndex(std::size_t i, std::size_t j) const {
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  /// Transpose of the matrix of x -> [x, e_j]; maps a covector a to the
  /// covector x -> a([x, e_j]).
  Matrix<F> adjointOfBasisTransposed(std::size_t j) const {
    Matrix<F> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      Vec<F> v = bracketOfBasis(i, j);
      for (std::size_t r = 0; r < n_; ++r) m.at(i, r) = v[r];
    }
    return m;
  }

  std::size_t n_ = 0;
  std::vector<Vec<F>> table_;
};

}  // namespace nilcx

#endif
