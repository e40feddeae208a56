#pragma once

#include "cohft/algebra/polynomial.hpp"

namespace cohft::algebra {

/// Greatest common divisor over Q[x_0..x_7], returned primitive with integer
/// coefficients and positive leading coefficient (gcd(0, 0) = 0).
///
/// Uses the heuristic evaluation/interpolation gcd, checked by trial
/// division, and falls back to a recursive primitive remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Primitive-PRS gcd only; kept separate so tests can cross-check routes.
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b);

/// Resultant in `var` (coefficients are polynomials in the other variables).
Polynomial resultant(const Polynomial& a, const Polynomial& b, std::size_t var);

}  // namespace cohft::algebra
