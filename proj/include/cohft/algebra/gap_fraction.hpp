#pragma once

#include <memory>
#include <vector>

#include "cohft/algebra/rational_function.hpp"

namespace cohft::algebra {

/// Pairwise coprime irreducible polynomials allowed in denominators.
struct GapBasis {
  std::vector<Polynomial> factors;
};

/// Fraction num / prod factor_k^{e_k} over a fixed GapBasis. Kept reduced
/// (no factor with positive exponent divides num), so equality is
/// structural. Arithmetic never computes a gcd.
class GapFraction {
 public:
  GapFraction() = default;
  GapFraction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  GapFraction(const BigRational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  GapFraction(std::shared_ptr<const GapBasis> basis, Polynomial num);
  /// Fails with AlgebraError if the denominator has other factors.
  GapFraction(std::shared_ptr<const GapBasis> basis, const RationalFunction& f);

  static GapFraction make(std::shared_ptr<const GapBasis> basis, Polynomial num, std::vector<int> exps);
  [[nodiscard]] const std::shared_ptr<const GapBasis>& basis() const { return basis_; }

  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] Polynomial denominator() const;
  [[nodiscard]] const std::vector<int>& exponents() const { return exps_; }
  [[nodiscard]] RationalFunction to_rational_function() const;

  GapFraction& operator+=(const GapFraction& o);
  GapFraction& operator-=(const GapFraction& o) { return *this += -o; }
  GapFraction& operator*=(const GapFraction& o);
  friend GapFraction operator+(GapFraction a, const GapFraction& b) { return a += b; }
  friend GapFraction operator-(GapFraction a, const GapFraction& b) { return a -= b; }
  friend GapFraction operator*(GapFraction a, const GapFraction& b) { return a *= b; }
  friend GapFraction operator/(const GapFraction& a, const GapFraction& b) { return a * b.inverse(); }
  GapFraction operator-() const;
  friend bool operator==(const GapFraction& a, const GapFraction& b);

  /// Needs the numerator to be a constant times a product of basis factors.
  [[nodiscard]] GapFraction inverse() const;
  [[nodiscard]] GapFraction derivative(std::size_t var) const;

 private:
  void adopt(const std::shared_ptr<const GapBasis>& b);
  void reduce();
  std::shared_ptr<const GapBasis> basis_;
  Polynomial num_;
  std::vector<int> exps_;  // empty or one per factor
};

/// Basis of the pairwise differences r_i - r_j (i < j), which must be
/// nonzero polynomials.
std::shared_ptr<const GapBasis> root_gap_basis(const std::vector<RationalFunction>& roots);

}  // namespace cohft::algebra
