#pragma once

#include <cstddef>
#include <vector>

#include "cohft/algebra/rational.hpp"
#include "cohft/algebra/series.hpp"

namespace cohft::algebra {

/// Dense row-major matrix over a commutative ring K.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix diagonal(const std::vector<K>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == K(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw AlgebraError("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x == K(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!(b(k, j) == K(0))) r(i, j) += x * b(k, j);
        }
      }
    return r;
  }
  [[nodiscard]] Matrix scaled(const K& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = x * s;
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  /// Inverse over a field by Gauss-Jordan elimination.
  [[nodiscard]] Matrix inverse() const {
    if (rows_ != cols_) throw AlgebraError("inverse of a non-square matrix");
    std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a(p, c) == K(0)) ++p;
      if (p == n) throw AlgebraError("singular matrix");
      if (p != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a(p, j), a(c, j));
          std::swap(inv(p, j), inv(c, j));
        }
      }
      K piv = K(1) / a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) = a(c, j) * piv;
        inv(c, j) = inv(c, j) * piv;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a(r, c) == K(0)) continue;
        K f = a(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(r, j) -= f * a(c, j);
          inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  template <class F>
  [[nodiscard]] auto map(F&& f) const {
    using T = decltype(f(data_[0]));
    Matrix<T> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;

  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw AlgebraError("matrix shape mismatch");
  }
};

/// Matrix-valued power series sum_n M_n z^n known modulo z^order. This is
/// the coefficient-matrix view of a matrix of truncated series.
template <class K>
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(std::size_t dim, std::size_t order) : dim_(dim), coeffs_(order, Matrix<K>(dim, dim)) {}

  static SeriesMatrix identity(std::size_t dim, std::size_t order) {
    SeriesMatrix r(dim, order);
    if (order > 0) r.coeffs_[0] = Matrix<K>::identity(dim);
    return r;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
  Matrix<K>& operator[](std::size_t n) { return coeffs_.at(n); }
  const Matrix<K>& operator[](std::size_t n) const { return coeffs_.at(n); }

  /// Entry (i, j) as a truncated series.
  [[nodiscard]] TruncatedSeries<K> entry(std::size_t i, std::size_t j) const {
    std::vector<K> c;
    for (const auto& m : coeffs_) c.push_back(m(i, j));
    return TruncatedSeries<K>(std::move(c), coeffs_.size());
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& m : coeffs_)
      if (!m.is_zero()) return false;
    return true;
  }

  [[nodiscard]] SeriesMatrix truncate(std::size_t order) const {
    SeriesMatrix r = *this;
    if (r.coeffs_.size() > order) r.coeffs_.resize(order);
    return r;
  }

  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
    std::size_t n = std::min(a.order(), b.order());
    SeriesMatrix r(a.dim_, n);
    for (std::size_t k = 0; k < n; ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
    std::size_t n = std::min(a.order(), b.order());
    SeriesMatrix r(a.dim_, n);
    for (std::size_t k = 0; k < n; ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }
  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    std::size_t n = std::min(a.order(), b.order());
    SeriesMatrix r(a.dim_, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) {
        if (a.coeffs_[i].is_zero() || b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    return r;
  }

  [[nodiscard]] SeriesMatrix transpose() const {
    SeriesMatrix r = *this;
    for (auto& m : r.coeffs_) m = m.transpose();
    return r;
  }
  /// z -> -z.
  [[nodiscard]] SeriesMatrix negate_variable() const {
    SeriesMatrix r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
  }
  /// z -> c z.
  [[nodiscard]] SeriesMatrix rescale_variable(const K& c) const {
    SeriesMatrix r = *this;
    K p(1);
    for (auto& m : r.coeffs_) {
      m = m.scaled(p);
      p = p * c;
    }
    return r;
  }
  /// Inverse, needs an invertible constant term.
  [[nodiscard]] SeriesMatrix inverse() const {
    std::size_t n = order();
    SeriesMatrix r(dim_, n);
    if (n == 0) return r;
    Matrix<K> inv0 = coeffs_[0].inverse();
    r.coeffs_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      Matrix<K> acc(dim_, dim_);
      for (std::size_t j = 1; j <= k; ++j) {
        if (!coeffs_[j].is_zero()) acc += coeffs_[j] * r.coeffs_[k - j];
      }
      r.coeffs_[k] = -(inv0 * acc);
    }
    return r;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Matrix<K>> coeffs_;
};

}  // namespace cohft::algebra
