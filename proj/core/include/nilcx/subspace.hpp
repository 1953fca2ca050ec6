#ifndef NILCX_SUBSPACE_HPP
#define NILCX_SUBSPACE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilcx/matrix.hpp"

namespace nilcx {

/// Linear subspace of F^n in canonical form: the stored basis is the reduced
/// row echelon form of any generating set, so equality of subspaces is
/// equality of representations.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t k = 0; k < ambient; ++k) {
      Vec<F> e = zeroVec<F>(ambient);
      e[k] = scalarOne<F>();
      s.basis_.push_back(std::move(e));
      s.pivots_.push_back(k);
    }
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec<F>>& gens) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    for (const auto& g : gens)
      if (g.size() != ambient) throw AmbientMismatch("generator size");
    std::size_t rank = 0;
    Matrix<F> red = Matrix<F>::fromRows(gens).rref(&rank, &s.pivots_);
    for (std::size_t r = 0; r < rank; ++r) s.basis_.push_back(red.row(r));
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool isZeroSpace() const { return basis_.empty(); }
  bool isFull() const { return basis_.size() == ambient_; }
  const std::vector<Vec<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Residual of v after eliminating along the basis; zero iff v lies in the
  /// subspace.
  Vec<F> reduce(Vec<F> v) const {
    if (v.size() != ambient_) throw AmbientMismatch("reduce argument");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      F c = v[pivots_[k]];
      if (!isZero(c)) axpyVec(v, c, basis_[k]);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return isZeroVec(reduce(v)); }

  bool contains(const Subspace& o) const {
    checkAmbient(o);
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  /// Coefficients of v in the stored basis, when v lies in the subspace.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (v.size() != ambient_) throw AmbientMismatch("coordinates argument");
    Vec<F> w = v;
    Vec<F> coeffs(basis_.size(), F{});
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      coeffs[k] = w[pivots_[k]];
      if (!isZero(coeffs[k])) axpyVec(w, coeffs[k], basis_[k]);
    }
    if (!isZeroVec(w)) return std::nullopt;
    return coeffs;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace operator+(const Subspace& o) const {
    checkAmbient(o);
    std::vector<Vec<F>> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, gens);
  }

  /// Zassenhaus intersection; the dimension identity
  /// dim(A) + dim(B) = dim(A+B) + dim(A cap B) is rechecked on every call.
  Subspace intersect(const Subspace& o) const {
    checkAmbient(o);
    const std::size_t n = ambient_;
    std::vector<Vec<F>> rows;
    for (const auto& u : basis_) {
      Vec<F> r = u;
      r.insert(r.end(), u.begin(), u.end());
      rows.push_back(std::move(r));
    }
    for (const auto& w : o.basis_) {
      Vec<F> r = w;
      r.resize(2 * n, F{});
      rows.push_back(std::move(r));
    }
    Subspace inter(n);
    if (!rows.empty()) {
      std::size_t rank = 0;
      std::vector<std::size_t> pivots;
      Matrix<F> red = Matrix<F>::fromRows(rows).rref(&rank, &pivots);
      std::vector<Vec<F>> gens;
      for (std::size_t k = 0; k < rank; ++k) {
        if (pivots[k] < n) continue;
        Vec<F> tail(n);
        for (std::size_t c = 0; c < n; ++c) tail[c] = red.at(k, n + c);
        gens.push_back(std::move(tail));
      }
      inter = span(n, gens);
    }
    if (dim() + o.dim() != (*this + o).dim() + inter.dim())
      throw OracleDisagreement("subspace intersection dimension identity");
    return inter;
  }

  /// Coordinates not used as pivots; the matching standard basis vectors span
  /// a complement of the subspace.
  std::vector<std::size_t> nonPivotCoordinates() const {
    std::vector<bool> isPivot(ambient_, false);
    for (std::size_t p : pivots_) isPivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!isPivot[k]) out.push_back(k);
    return out;
  }

 private:
  void checkAmbient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw AmbientMismatch("subspace ambients differ");
  }

  std::size_t ambient_ = 0;
  std::vector<Vec<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> applyMatrix(const Matrix<F>& m, const Subspace<F>& s) {
  if (m.cols() != s.ambient()) throw AmbientMismatch("matrix application to subspace");
  std::vector<Vec<F>> gens;
  for (const auto& b : s.basis()) gens.push_back(m.apply(b));
  return Subspace<F>::span(m.rows(), gens);
}

/// Annihilator in the dual space, identified with F^n via the standard basis:
/// all covectors vanishing on the subspace.
template <class F>
Subspace<F> annihilator(const Subspace<F>& s) {
  if (s.isZeroSpace()) return Subspace<F>::full(s.ambient());
  return Subspace<F>::span(s.ambient(),
                           Matrix<F>::fromRows(s.basis()).kernelBasis());
}

template <class F>
Subspace<typename FieldInfo<F>::Complexified> complexifySubspace(
    const Subspace<F>& s) {
  using C = typename FieldInfo<F>::Complexified;
  std::vector<Vec<C>> gens;
  for (const auto& b : s.basis()) gens.push_back(complexifyVec(b));
  auto out = Subspace<C>::span(s.ambient(), gens);
  if (out.dim() != s.dim())
    throw OracleDisagreement("complexification changed dimension");
  return out;
}

template <class F>
Subspace<F> conjugateSubspace(const Subspace<F>& s) {
  std::vector<Vec<F>> gens;
  for (const auto& b : s.basis()) gens.push_back(conjugateVec(b));
  return Subspace<F>::span(s.ambient(), gens);
}

/// Real points of a conjugation stable subspace of the complexification;
/// throws NotConjugationStable otherwise.
template <class G>
Subspace<typename FieldInfo<G>::Real> realPoints(const Subspace<G>& s) {
  using R = typename FieldInfo<G>::Real;
  for (const auto& b : s.basis())
    if (!s.contains(conjugateVec(b)))
      throw NotConjugationStable();
  std::vector<Vec<R>> gens;
  for (const auto& b : s.basis()) {
    Vec<R> re(b.size()), im(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      re[k] = b[k].re;
      im[k] = b[k].im;
    }
    gens.push_back(std::move(re));
    gens.push_back(std::move(im));
  }
  auto out = Subspace<R>::span(s.ambient(), gens);
  if (out.dim() != s.dim())
    throw OracleDisagreement("real point dimension of a stable subspace");
  return out;
}

template <class F>
Subspace<typename FieldInfo<F>::Specialized> specializeSubspace(
    const Subspace<F>& s, const Rational& at) {
  using S = typename FieldInfo<F>::Specialized;
  std::vector<Vec<S>> gens;
  for (const auto& b : s.basis()) {
    Vec<S> v(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) v[k] = specializeScalar(b[k], at);
    gens.push_back(std::move(v));
  }
  auto out = Subspace<S>::span(s.ambient(), gens);
  if (out.dim() != s.dim())
    throw OracleDisagreement("specialization changed subspace dimension");
  return out;
}

inline Subspace<Rational> rationalHull(const Subspace<Rational>& s) { return s; }

/// Smallest subspace with a basis of constant vectors containing the given
/// one: expand each basis vector over powers of t after clearing denominators
/// and take the span of the coefficient vectors.
inline Subspace<RationalFunction> rationalHull(const Subspace<RationalFunction>& s) {
  std::vector<Vec<RationalFunction>> gens;
  for (const auto& b : s.basis()) {
    Polynomial lcm(Rational(1));
    for (const auto& x : b) {
      Polynomial g = Polynomial::gcd(lcm, x.den());
      Polynomial q, r;
      Polynomial::divrem(x.den(), g, q, r);
      lcm = lcm * q;
    }
    std::vector<Polynomial> cleared;
    int maxDeg = 0;
    for (const auto& x : b) {
      RationalFunction w = x * RationalFunction(lcm);
      if (w.den().degree() != 0)
        throw Error("denominator clearing failed");
      Polynomial p = w.num();
      maxDeg = std::max(maxDeg, p.degree());
      cleared.push_back(std::move(p));
    }
    for (int k = 0; k <= maxDeg; ++k) {
      Vec<RationalFunction> coeffVec(b.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < b.size(); ++j) {
        Rational c = cleared[j].coeff(k);
        nonzero = nonzero || !isZero(c);
        coeffVec[j] = RationalFunction(c);
      }
      if (nonzero) gens.push_back(std::move(coeffVec));
    }
  }
  auto hull = Subspace<RationalFunction>::span(s.ambient(), gens);
  if (!hull.contains(s))
    throw OracleDisagreement("rational hull does not contain its argument");
  return hull;
}

template <class F>
bool isRationalSubspace(const Subspace<F>& s) {
  return rationalHull(s) == s;
}

}  // namespace nilcx

#endif
