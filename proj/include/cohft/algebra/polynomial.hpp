#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohft/algebra/rational.hpp"

namespace cohft::algebra {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Every polynomial lives in Q[x_0, ..., x_7]; which
/// indices are in use (and their names) is carried by a VariableSet.
using Exponents = std::array<std::uint16_t, kMaxVars>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, then lexicographic
/// with x_0 > x_1 > ...
bool grlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exponents{};
  BigRational coefficient;
};

/// Sparse multivariate polynomial over Q. Terms are stored in strictly
/// decreasing grlex order with no zero coefficients, so structural
/// equality is value equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(const BigRational& constant);  // NOLINT(google-explicit-constructor)

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(const Exponents& exponents, const BigRational& coefficient);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] BigRational constant_value() const;  // requires is_constant()
  [[nodiscard]] BigRational constant_term() const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Term& leading_term() const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] unsigned degree(std::size_t var) const;
  /// Lowest exponent of `var` over all terms (0 for the zero polynomial).
  [[nodiscard]] unsigned min_degree(std::size_t var) const;
  [[nodiscard]] bool uses_variable(std::size_t var) const;
  /// Bitmask of variables with a nonzero exponent somewhere.
  [[nodiscard]] unsigned variable_mask() const;
  [[nodiscard]] bool is_homogeneous() const;
  [[nodiscard]] BigRational coefficient(const Exponents& e) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const BigRational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(Polynomial a, long s) { return a *= BigRational(s); }
  friend Polynomial operator*(long s, Polynomial a) { return a *= BigRational(s); }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  [[nodiscard]] Polynomial pow(unsigned exponent) const;
  [[nodiscard]] Polynomial derivative(std::size_t var) const;
  /// Replaces x_var by `value`.
  [[nodiscard]] Polynomial substitute(std::size_t var, const Polynomial& value) const;
  [[nodiscard]] BigRational evaluate(std::span<const BigRational> point) const;
  /// Multiplies by x^shift (shift may be negative if every term allows it).
  [[nodiscard]] Polynomial shift(std::size_t var, int amount) const;

  /// Exact division; std::nullopt when `divisor` does not divide.
  [[nodiscard]] std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Division that throws AlgebraError when not exact.
  [[nodiscard]] Polynomial operator/(const Polynomial& divisor) const;

  /// Coefficients c_k (polynomials free of x_var) with p = sum c_k x_var^k.
  [[nodiscard]] std::vector<Polynomial> coefficients_in(std::size_t var) const;
  static Polynomial from_coefficients(std::size_t var, const std::vector<Polynomial>& coeffs);

  /// Positive rational c with p / c having coprime integer coefficients and
  /// positive leading coefficient.
  [[nodiscard]] BigRational content() const;
  [[nodiscard]] Polynomial primitive_part() const;
  /// Largest monomial dividing every term.
  [[nodiscard]] Exponents monomial_content() const;

 private:
  std::vector<Term> terms_;
};

/// Ordered variable names used for printing and serialization.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names);
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& name) const;
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

std::string to_string(const Polynomial& p, const VariableSet& vars);

}  // namespace cohft::algebra
