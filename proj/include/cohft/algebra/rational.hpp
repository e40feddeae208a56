#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cohft::algebra {

/// Arbitrary-precision rational, always kept in canonical form
/// (gcd(|num|, den) = 1, den > 0) by GMP.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Error raised by exact-arithmetic operations (division by zero,
/// non-invertible leading terms, violated preconditions).
class AlgebraError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline BigRational make_rational(long num, long den = 1) {
  if (den == 0) throw AlgebraError("division by zero");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw AlgebraError("malformed rational: " + text);
  if (r.get_den() == 0) throw AlgebraError("division by zero");
  r.canonicalize();
  return r;
}

BigInteger factorial(unsigned n);
BigInteger double_factorial(long n);  // (-1)!! = 0!! = 1
BigInteger binomial(unsigned n, unsigned k);
BigRational pow(const BigRational& base, long exponent);

}  // namespace cohft::algebra
