#pragma once

#include <span>
#include <string>

#include "cohft/algebra/polynomial.hpp"

namespace cohft::algebra {

/// Quotient of polynomials in canonical form: gcd(num, den) = 1 and the
/// grlex-leading coefficient of den is 1. Structural equality is equality
/// of fractions.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(std::size_t i) { return {Polynomial::variable(i)}; }
  /// Skips the gcd: the caller guarantees gcd(num, den) = 1.
  static RationalFunction from_coprime(Polynomial num, Polynomial den);

  [[nodiscard]] const Polynomial& numerator() const { return num_; }
  [[nodiscard]] const Polynomial& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  [[nodiscard]] BigRational constant_value() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] RationalFunction pow(long exponent) const;
  [[nodiscard]] RationalFunction derivative(std::size_t var) const;
  [[nodiscard]] RationalFunction substitute(std::size_t var, const RationalFunction& value) const;
  [[nodiscard]] BigRational evaluate(std::span<const BigRational> point) const;

 private:
  Polynomial num_;
  Polynomial den_;
  void normalize();
};

/// Builds num/den in canonical form; throws AlgebraError("division by zero").
RationalFunction rf_normalize(const Polynomial& num, const Polynomial& den);

/// Substitutes a polynomial/rational value into a polynomial (Horner in RF).
RationalFunction substitute(const Polynomial& p, std::size_t var, const RationalFunction& value);

std::string to_string(const RationalFunction& f, const VariableSet& vars);

}  // namespace cohft::algebra
