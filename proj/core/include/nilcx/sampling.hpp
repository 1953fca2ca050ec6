#ifndef NILCX_SAMPLING_HPP
#define NILCX_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "nilcx/complex_structure.hpp"

namespace nilcx {

/// Seeded pseudo random source for all samplers.  Everything downstream is a
/// deterministic function of the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  long intIn(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  long nonzeroIn(long lo, long hi) {
    for (;;) {
      long v = intIn(lo, hi);
      if (v != 0) return v;
    }
  }

  bool coin() { return intIn(0, 1) == 1; }

  std::size_t index(std::size_t size) {
    return static_cast<std::size_t>(intIn(0, static_cast<long>(size) - 1));
  }

 private:
  std::mt19937_64 eng_;
};

template <class F>
Vec<F> randomVec(Rng& rng, std::size_t n, long range = 3) {
  Vec<F> v(n, F{});
  for (auto& x : v) x = scalarFromInt<F>(rng.intIn(-range, range));
  return v;
}

template <class F>
Matrix<F> randomMatrix(Rng& rng, std::size_t rows, std::size_t cols,
                       long range = 3) {
  Matrix<F> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = scalarFromInt<F>(rng.intIn(-range, range));
  return m;
}

/// Product of random row shears and sign flips applied to the identity;
/// invertible by construction with determinant ±1.
template <class F>
Matrix<F> randomUnimodular(Rng& rng, std::size_t n, std::size_t shears = 0,
                           long range = 2) {
  if (shears == 0) shears = 2 * n;
  Matrix<F> m = Matrix<F>::identity(n);
  for (std::size_t s = 0; s < shears; ++s) {
    std::size_t i = rng.index(n), j = rng.index(n);
    if (i == j) continue;
    F c = scalarFromInt<F>(rng.nonzeroIn(-range, range));
    for (std::size_t k = 0; k < n; ++k) m.at(i, k) += c * m.at(j, k);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (rng.coin())
      for (std::size_t k = 0; k < n; ++k) m.at(i, k) = -m.at(i, k);
  return m;
}

/// Block matrix sending e_{2k-1} to e_{2k} and e_{2k} to -e_{2k-1}.
template <class F>
Matrix<F> standardAlmostComplexMatrix(std::size_t n) {
  if (n % 2 != 0) throw DimensionMismatch("almost complex structures need even dimension");
  Matrix<F> j(n, n);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    j.at(k + 1, k) = scalarOne<F>();
    j.at(k, k + 1) = -scalarOne<F>();
  }
  return j;
}

template <class F>
Matrix<F> conjugateByInvertible(const Matrix<F>& m, const Matrix<F>& p) {
  auto inv = p.inverse();
  if (!inv) throw DimensionMismatch("conjugating matrix is singular");
  return p * m * *inv;
}

/// Uniform-ish almost complex structure: the standard block matrix conjugated
/// by a random unimodular basis change.  Rarely integrable; meant for oracle
/// agreement checks, not for sampling complex structures.
template <class F>
ComplexStructure<F> randomAlmostComplex(Rng& rng, const LieAlgebra<F>& g,
                                        long range = 2) {
  Matrix<F> p = randomUnimodular<F>(rng, g.dim(), 0, range);
  return ComplexStructure<F>(
      g, conjugateByInvertible(standardAlmostComplexMatrix<F>(g.dim()), p));
}

template <class F>
Subspace<F> randomSubspace(Rng& rng, std::size_t ambient, std::size_t dim,
                           long range = 3) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec<F>> vs;
    for (std::size_t k = 0; k < dim; ++k)
      vs.push_back(randomVec<F>(rng, ambient, range));
    Subspace<F> s = Subspace<F>::span(ambient, vs);
    if (s.dim() == dim) return s;
  }
  throw SamplerExhausted("could not sample a subspace of the requested dimension");
}

/// Bracket compatibility of an invertible matrix with the structure constants.
template <class F>
bool isAutomorphism(const LieAlgebra<F>& g, const Matrix<F>& m) {
  const std::size_t n = g.dim();
  if (m.rows() != n || m.cols() != n || !m.inverse()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> lhs = m.apply(g.bracketOfBasis(i, j));
      Vec<F> rhs = g.bracket(m.column(i), m.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (!(lhs[k] == rhs[k])) return false;
    }
  return true;
}

/// Unipotent automorphism I + S with S built from annihilator functionals of
/// C¹g + Zg and values in the centre; works for every nilpotent algebra and
/// is nontrivial whenever C¹g + Zg is proper.
template <class F>
Matrix<F> centralShearAutomorphism(Rng& rng, const LieAlgebra<F>& g,
                                   long range = 3) {
  const std::size_t n = g.dim();
  Subspace<F> z = g.centre();
  Subspace<F> v = g.derived() + z;
  Subspace<F> ann = annihilator(v);
  Matrix<F> s(n, n);
  if (!ann.isZeroSpace() && !z.isZeroSpace()) {
    std::size_t terms = 1 + rng.index(2);
    for (std::size_t t = 0; t < terms; ++t) {
      Vec<F> alpha(n, F{});
      for (std::size_t r = 0; r < ann.dim(); ++r)
        axpyVec(alpha, scalarFromInt<F>(-rng.intIn(-range, range)),
                ann.basis()[r]);
      Vec<F> zv(n, F{});
      for (std::size_t r = 0; r < z.dim(); ++r)
        axpyVec(zv, scalarFromInt<F>(-rng.intIn(-range, range)), z.basis()[r]);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s.at(i, j) += zv[i] * alpha[j];
    }
  }
  return Matrix<F>::identity(n) + s;
}

/// Automorphism of the Heisenberg-plus-abelian algebra on basis
/// x_1..x_n, y_1..y_n, c, z_1..z_m: a symplectic similitude on the span of
/// the x_i, y_i, multiplication of c by the multiplier, a shear of the
/// symplectic block into the centre, and an invertible map on the z_j allowed
/// to hit c.
inline Matrix<Rational> heisenbergAutomorphism(Rng& rng, std::size_t n,
                                               std::size_t m) {
  const std::size_t dim = 2 * n + 1 + m;
  auto omega = [n](const Vec<Rational>& u, const Vec<Rational>& v) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += u[i] * v[n + i] - u[n + i] * v[i];
    return s;
  };
  std::vector<Vec<Rational>> cols;
  for (std::size_t i = 0; i < 2 * n; ++i)
    cols.push_back(Matrix<Rational>::identity(2 * n).column(i));
  std::size_t transvections = 2 + rng.index(3);
  for (std::size_t t = 0; t < transvections; ++t) {
    Vec<Rational> dir = randomVec<Rational>(rng, 2 * n, 2);
    Rational lambda = ratFromLong(rng.nonzeroIn(-2, 2));
    for (auto& col : cols) {
      Rational w = omega(col, dir);
      if (!isZero(w)) axpyVec(col, Rational(-lambda * w), dir);
    }
  }
  Rational mu = ratFromLong(rng.nonzeroIn(-3, 3));
  for (std::size_t i = 0; i < n; ++i) cols[i] = scaleVec(cols[i], mu);

  Matrix<Rational> phi(dim, dim);
  for (std::size_t j = 0; j < 2 * n; ++j) {
    for (std::size_t i = 0; i < 2 * n; ++i) phi.at(i, j) = cols[j][i];
    for (std::size_t r = 2 * n; r < dim; ++r)
      phi.at(r, j) = ratFromLong(rng.intIn(-2, 2));
  }
  phi.at(2 * n, 2 * n) = mu;
  if (m > 0) {
    Matrix<Rational> b = randomUnimodular<Rational>(rng, m);
    for (std::size_t j = 0; j < m; ++j) {
      phi.at(2 * n, 2 * n + 1 + j) = ratFromLong(rng.intIn(-2, 2));
      for (std::size_t i = 0; i < m; ++i)
        phi.at(2 * n + 1 + i, 2 * n + 1 + j) = b.at(i, j);
    }
  }
  return phi;
}

/// Automorphism of a free 2-step algebra laid out as k generators followed by
/// the k(k-1)/2 pair slots with [e_i, e_j] = -e_{slot(i,j)}: any invertible
/// map on generators plus a shear into degree two extends uniquely.
template <class F>
std::optional<Matrix<F>> freeTwoStepAutomorphism(Rng& rng,
                                                 const LieAlgebra<F>& g,
                                                 std::size_t generators,
                                                 long range = 2) {
  const std::size_t n = g.dim();
  const std::size_t pairs = generators * (generators - 1) / 2;
  if (n != generators + pairs)
    throw DimensionMismatch("not a free 2-step layout");
  Matrix<F> a = randomUnimodular<F>(rng, generators, 0, range);
  Matrix<F> phi(n, n);
  for (std::size_t j = 0; j < generators; ++j) {
    for (std::size_t i = 0; i < generators; ++i) phi.at(i, j) = a.at(i, j);
    for (std::size_t i = generators; i < n; ++i)
      phi.at(i, j) = scalarFromInt<F>(rng.intIn(-range, range));
  }
  std::size_t slot = generators;
  for (std::size_t i = 0; i < generators; ++i)
    for (std::size_t j = i + 1; j < generators; ++j, ++slot) {
      Vec<F> img = g.bracket(phi.column(i), phi.column(j));
      for (std::size_t r = 0; r < n; ++r) phi.at(r, slot) = -img[r];
    }
  if (!isAutomorphism(g, phi)) return std::nullopt;
  return phi;
}

/// Conjugates a base structure by automorphisms drawn from the supplied
/// family; integrability is preserved, so the result samples the orbit of the
/// base structure.
template <class F, class AutSampler>
ComplexStructure<F> conjugatedStructure(const ComplexStructure<F>& base,
                                        AutSampler&& nextAut) {
  Matrix<F> phi = nextAut();
  return ComplexStructure<F>(base.algebra(),
                             conjugateByInvertible(base.matrix(), phi));
}

}  // namespace nilcx

#endif
