#pragma once

#include <limits>
#include <map>
#include <string>

#include "cohft/algebra/rational.hpp"

namespace cohft::algebra {

/// Laurent series in one variable with rational coefficients, known up to
/// (excluding) the absolute power `precision`. Exact Laurent polynomials
/// have precision kExactPrecision.
class LaurentSeries {
 public:
  static constexpr long kExactPrecision = std::numeric_limits<long>::max();

  LaurentSeries() = default;
  LaurentSeries(long c) { if (c != 0) terms_[0] = c; }  // NOLINT(google-explicit-constructor)
  LaurentSeries(const BigRational& c) { if (c != 0) terms_[0] = c; }  // NOLINT(google-explicit-constructor)
  static LaurentSeries monomial(const BigRational& c, long exponent, long precision = kExactPrecision);

  [[nodiscard]] long precision() const { return precision_; }
  [[nodiscard]] bool is_exact() const { return precision_ == kExactPrecision; }
  [[nodiscard]] const std::map<long, BigRational>& terms() const { return terms_; }
  [[nodiscard]] BigRational coefficient(long e) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent with a nonzero coefficient (precision if none).
  [[nodiscard]] long valuation() const { return terms_.empty() ? precision_ : terms_.begin()->first; }
  [[nodiscard]] LaurentSeries with_precision(long precision) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  LaurentSeries operator-() const;
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  /// Inverse; needs a nonzero leading term. The relative precision of the
  /// result matches the relative precision of the input; exact monomials
  /// invert exactly, other exact inputs need `relative_order`.
  [[nodiscard]] LaurentSeries inverse(long relative_order = -1) const;
  /// t d/dt.
  [[nodiscard]] LaurentSeries euler_derivative() const;
  [[nodiscard]] std::string to_string(const std::string& var = "t") const;

 private:
  std::map<long, BigRational> terms_;
  long precision_ = kExactPrecision;
  void prune();
};

}  // namespace cohft::algebra
