#ifndef NILCX_MATRIX_HPP
#define NILCX_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilcx/fields.hpp"

namespace nilcx {

template <class F>
using Vec = std::vector<F>;

template <class F>
Vec<F> zeroVec(std::size_t n) {
  return Vec<F>(n, F{});
}

template <class F>
bool isZeroVec(const Vec<F>& v) {
  for (const auto& x : v)
    if (!isZero(x)) return false;
  return true;
}

template <class F>
Vec<F> addVec(Vec<F> a, const Vec<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

template <class F>
Vec<F> scaleVec(Vec<F> a, const F& c) {
  for (auto& x : a) x *= c;
  return a;
}

/// a -= c*b in place.
template <class F>
void axpyVec(Vec<F>& a, const F& c, const Vec<F>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= F(c * b[k]);
}

/// Dense matrix over an exact field, row major.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, F{}) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = scalarOne<F>();
    return m;
  }

  static Matrix fromRows(const std::vector<Vec<F>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged row list");
      for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  static Matrix fromColumns(const std::vector<Vec<F>>& cols) {
    return fromRows(cols).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    Vec<F> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
  }

  Vec<F> column(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
  }

  bool isZero() const {
    for (const auto& x : data_)
      if (!nilcx::isZero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = F(-x);
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    checkSameShape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    checkSameShape(o);
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (nilcx::isZero(at(r, k))) continue;
        for (std::size_t c = 0; c < o.cols_; ++c)
          m.at(r, c) += F(at(r, k) * o.at(k, c));
      }
    return m;
  }

  Matrix scaled(const F& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= c;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec<F> apply(const Vec<F>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix apply");
    Vec<F> out(rows_, F{});
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        if (nilcx::isZero(at(r, c)) || nilcx::isZero(v[c])) continue;
        out[r] += F(at(r, c) * v[c]);
      }
    return out;
  }

  /// Gauss-Jordan reduced row echelon form; optionally reports the rank and
  /// the pivot columns.
  Matrix rref(std::size_t* rank_out = nullptr,
              std::vector<std::size_t>* pivots_out = nullptr) const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
      std::size_t sel = lead;
      while (sel < rows_ && nilcx::isZero(m.at(sel, col))) ++sel;
      if (sel == rows_) continue;
      if (sel != lead)
        for (std::size_t c = 0; c < cols_; ++c)
          std::swap(m.at(sel, c), m.at(lead, c));
      F inv = F(scalarOne<F>() / m.at(lead, col));
      for (std::size_t c = col; c < cols_; ++c) m.at(lead, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == lead || nilcx::isZero(m.at(r, col))) continue;
        F f = m.at(r, col);
        for (std::size_t c = col; c < cols_; ++c)
          m.at(r, c) -= F(f * m.at(lead, c));
      }
      pivots.push_back(col);
      ++lead;
    }
    if (rank_out) *rank_out = pivots.size();
    if (pivots_out) *pivots_out = std::move(pivots);
    return m;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    rref(&r);
    return r;
  }

  /// Basis of the right kernel {x : A x = 0}.
  std::vector<Vec<F>> kernelBasis() const {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Matrix r = rref(&rank, &pivots);
    std::vector<bool> isPivot(cols_, false);
    for (std::size_t p : pivots) isPivot[p] = true;
    std::vector<Vec<F>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (isPivot[free]) continue;
      Vec<F> x(cols_, F{});
      x[free] = scalarOne<F>();
      for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = F(-r.at(k, free));
      basis.push_back(std::move(x));
    }
    return basis;
  }

  /// One solution of A x = b, if the system is consistent.
  std::optional<Vec<F>> solve(const Vec<F>& b) const {
    if (b.size() != rows_) throw DimensionMismatch("solve rhs size");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_) = b[r];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Matrix red = aug.rref(&rank, &pivots);
    for (std::size_t p : pivots)
      if (p == cols_) return std::nullopt;
    Vec<F> x(cols_, F{});
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = red.at(k, cols_);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
      aug.at(r, cols_ + r) = scalarOne<F>();
    }
    std::size_t rank = 0;
    std::vector<std::size_t> piv;
    Matrix red = aug.rref(&rank, &piv);
    if (rank != rows_) return std::nullopt;
    for (std::size_t k = 0; k < piv.size(); ++k)
      if (piv[k] >= cols_) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = red.at(r, cols_ + c);
    return inv;
  }

 private:
  void checkSameShape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
Matrix<typename FieldInfo<F>::Complexified> complexifyMatrix(const Matrix<F>& m) {
  Matrix<typename FieldInfo<F>::Complexified> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = complexifyScalar(m.at(r, c));
  return out;
}

template <class F>
Matrix<typename FieldInfo<F>::Specialized> specializeMatrix(const Matrix<F>& m,
                                                            const Rational& at) {
  Matrix<typename FieldInfo<F>::Specialized> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.at(r, c) = specializeScalar(m.at(r, c), at);
  return out;
}

template <class F>
Vec<typename FieldInfo<F>::Complexified> complexifyVec(const Vec<F>& v) {
  Vec<typename FieldInfo<F>::Complexified> out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = complexifyScalar(v[k]);
  return out;
}

template <class F>
Vec<F> conjugateVec(Vec<F> v) {
  for (auto& x : v) x = conjScalar(x);
  return v;
}

}  // namespace nilcx

#endif
