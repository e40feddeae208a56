#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "cohft/algebra/rational.hpp"

namespace cohft::algebra {

/// Order used for exact (untruncated) constants.
inline constexpr std::size_t kExactOrder = std::numeric_limits<std::size_t>::max();

/// Power series c_0 + c_1 x + ... known modulo x^order. Mixing two orders
/// truncates to the smaller one; the result records it.
template <class K>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::size_t order) : order_(order) {}
  TruncatedSeries(std::vector<K> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order) { trim(); }

  static TruncatedSeries constant(const K& c, std::size_t order = kExactOrder) { return TruncatedSeries({c}, order); }
  /// The series x (order must exceed 1 to be non-zero).
  static TruncatedSeries variable(std::size_t order) { return TruncatedSeries({K(0), K(1)}, order); }

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] bool is_exact() const { return order_ == kExactOrder; }
  [[nodiscard]] const std::vector<K>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the stored terms. Throws if i >= order.
  [[nodiscard]] K operator[](std::size_t i) const {
    if (i >= order_) throw AlgebraError("coefficient beyond truncation order");
    return i < coeffs_.size() ? coeffs_[i] : K(0);
  }
  void set(std::size_t i, K value) {
    if (i >= order_) throw AlgebraError("coefficient beyond truncation order");
    if (coeffs_.size() <= i) coeffs_.resize(i + 1, K(0));
    coeffs_[i] = std::move(value);
    trim();
  }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Index of the first nonzero coefficient, or order() if none is known.
  [[nodiscard]] std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!is_zero_value(coeffs_[i])) return i;
    return order_;
  }

  [[nodiscard]] TruncatedSeries truncate(std::size_t order) const {
    TruncatedSeries r = *this;
    r.order_ = std::min(order_, order);
    if (r.coeffs_.size() > r.order_) r.coeffs_.resize(r.order_);
    r.trim();
    return r;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    order_ = std::min(order_, o.order_);
    std::size_t n = std::min(std::max(coeffs_.size(), o.coeffs_.size()), order_);
    coeffs_.resize(n, K(0));
    for (std::size_t i = 0; i < n && i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
    std::size_t n = std::min(a.coeffs_.size() + b.coeffs_.size() - 1, r.order_);
    r.coeffs_.assign(n, K(0));
    for (std::size_t i = 0; i < a.coeffs_.size() && i < n; ++i) {
      if (is_zero_value(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < n; ++j) {
        if (is_zero_value(b.coeffs_[j])) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries scaled(const K& s) const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.trim();
    return r;
  }

  /// Multiplicative inverse; the constant term must be invertible.
  [[nodiscard]] TruncatedSeries inverse() const {
    if (coeffs_.empty() || is_zero_value(coeffs_[0])) throw AlgebraError("series with zero constant term is not invertible");
    if (order_ == kExactOrder) throw AlgebraError("inverse of an exact series needs an explicit order");
    K inv0 = K(1) / coeffs_[0];
    std::vector<K> r(order_, K(0));
    r[0] = inv0;
    for (std::size_t n = 1; n < order_; ++n) {
      K acc(0);
      for (std::size_t k = 1; k <= n && k < coeffs_.size(); ++k) {
        if (!is_zero_value(coeffs_[k])) acc += coeffs_[k] * r[n - k];
      }
      r[n] = -(acc * inv0);
    }
    return TruncatedSeries(std::move(r), order_);
  }

  /// d/dx.
  [[nodiscard]] TruncatedSeries derivative() const {
    std::size_t ord = order_ == kExactOrder ? kExactOrder : (order_ == 0 ? 0 : order_ - 1);
    std::vector<K> r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r.push_back(coeffs_[i] * K(static_cast<long>(i)));
    return TruncatedSeries(std::move(r), ord);
  }

  /// x d/dx.
  [[nodiscard]] TruncatedSeries euler_derivative() const {
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] * K(static_cast<long>(i));
    r.trim();
    return r;
  }

  /// x -> c x.
  [[nodiscard]] TruncatedSeries rescaled(const K& c) const {
    TruncatedSeries r = *this;
    K p(1);
    for (auto& coeff : r.coeffs_) {
      coeff = coeff * p;
      p = p * c;
    }
    r.trim();
    return r;
  }

  /// Multiplication by x^k.
  [[nodiscard]] TruncatedSeries shifted(std::size_t k) const {
    TruncatedSeries r(order_);
    if (coeffs_.empty()) return r;
    std::size_t n = std::min(coeffs_.size() + k, order_);
    r.coeffs_.assign(n, K(0));
    for (std::size_t i = 0; i + k < n; ++i) r.coeffs_[i + k] = coeffs_[i];
    r.trim();
    return r;
  }

  /// Equality of the known coefficients up to the common order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order_, b.order_);
    std::size_t top = std::min(n, std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < top; ++i) {
      K x = i < a.coeffs_.size() ? a.coeffs_[i] : K(0);
      K y = i < b.coeffs_.size() ? b.coeffs_[i] : K(0);
      if (!(x == y)) return false;
    }
    return true;
  }

  static bool is_zero_value(const K& v) { return v == K(0); }

 private:
  std::vector<K> coeffs_;
  std::size_t order_ = kExactOrder;

  void trim() {
    if (coeffs_.size() > order_) coeffs_.resize(order_);
    while (!coeffs_.empty() && is_zero_value(coeffs_.back())) coeffs_.pop_back();
  }
};

/// exp(s) for s with zero constant term.
template <class K>
TruncatedSeries<K> series_exp(const TruncatedSeries<K>& s) {
  if (!s.is_zero() && !(s.coefficients()[0] == K(0))) throw AlgebraError("series_exp needs a zero constant term");
  if (s.is_exact() && s.is_zero()) return TruncatedSeries<K>::constant(K(1));
  if (s.is_exact()) throw AlgebraError("series_exp of an exact series needs an explicit order");
  std::size_t n = s.order();
  std::vector<K> e(n, K(0));
  if (n > 0) e[0] = K(1);
  const auto& c = s.coefficients();
  // n e_n = sum_k k s_k e_{n-k}
  for (std::size_t i = 1; i < n; ++i) {
    K acc(0);
    for (std::size_t k = 1; k <= i && k < c.size(); ++k) {
      if (!(c[k] == K(0))) acc += c[k] * e[i - k] * K(static_cast<long>(k));
    }
    e[i] = acc * K(BigRational(1, static_cast<long>(i)));
  }
  return TruncatedSeries<K>(std::move(e), n);
}

/// log(s) for s with constant term 1.
template <class K>
TruncatedSeries<K> series_log(const TruncatedSeries<K>& s) {
  if (s.is_zero() || !(s.coefficients()[0] == K(1))) throw AlgebraError("series_log needs constant term 1");
  if (s.is_exact()) throw AlgebraError("series_log of an exact series needs an explicit order");
  // log(s)' = s'/s
  TruncatedSeries<K> q = s.derivative().truncate(s.order() - 1) * s.truncate(s.order() - 1).inverse();
  std::vector<K> r(s.order(), K(0));
  for (std::size_t i = 1; i < s.order(); ++i) r[i] = q[i - 1] * K(BigRational(1, static_cast<long>(i)));
  return TruncatedSeries<K>(std::move(r), s.order());
}

}  // namespace cohft::algebra
