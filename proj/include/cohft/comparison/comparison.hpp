#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohft/algebra/laurent.hpp"
#include "cohft/algebra/serialize.hpp"
#include "cohft/qde/solver.hpp"

namespace cohft::comparison {

using algebra::BigRational;
using algebra::Json;
using algebra::LaurentSeries;
using algebra::Matrix;
using frobenius::RF;

/// Outcome of one verification: {check, params, pass, firstFailureCell?, details}.
struct CheckReport {
  std::string check;
  Json params = Json::object();
  bool pass = false;
  std::optional<std::string> first_failure;
  Json details = Json::object();

  [[nodiscard]] Json to_json() const;
  void fail(const std::string& cell) {
    if (pass || !first_failure) first_failure = cell;
    pass = false;
  }
};

/// Equivariant R-matrix in A-side variables vs the A-side R-matrix.
/// Sub-checks: the z^n coefficient has lam-degree at most n (so z -> z/lam
/// leaves no positive lam-power); its lam^n part equals solve_r_a; and it
/// agrees with solve_r_pm to the given q-order after the matchup.
CheckReport thm1_check(int m, std::size_t z_order, std::size_t q_order);

/// phi^{-1} = lambda^{-1} sum_i c_i (-t/lambda)^i with c_i = (m+2)/(m+2+i(m+1)).
struct PhiSeries {
  int m = 1;
  std::vector<BigRational> inverse_coeffs;
};
PhiSeries phi_series(int m, std::size_t order);
/// Coefficients of (-t/lambda)^i in lambda (phi^{-1} + L_E phi^{-1} + q^{-1}), q = -t - lambda.
std::vector<BigRational> phi_ode_residual(const PhiSeries& phi);
/// phi at lambda = 1 as a t-series known below t^precision.
LaurentSeries phi_at_unit_lambda(const PhiSeries& phi, long precision);

/// Matrix power series in z with Laurent-series entries in t.
using FlatSeries = std::vector<Matrix<LaurentSeries>>;

/// Multiplication by E = (m+1)/(m+2) t d/dt in the basis 1, X, ..., X^m at the Airy point.
Matrix<LaurentSeries> airy_xi(int m);
/// diag((2j - m) / (2(m+2))).
Matrix<LaurentSeries> airy_mu(int m);

/// Flat-basis A-side R-matrix at the Airy point from the closed-form saddle
/// expansion and root sums; entries are Laurent monomials in t.
FlatSeries airy_flat_r_a(int m, std::size_t z_order);
/// Flat-basis form Psi R Psi^{-1} of a hat-form R-matrix evaluated at the
/// Airy point Q_j = w^j s (w a primitive (m+1)-th root of unity, t = -s^{m+1}),
/// with the variable "lam" (if present) set to 1.
FlatSeries flat_at_airy(const qde::RMatrixA& r);

/// [R, xi] + z L_E R - z R mu.
FlatSeries flat_a_residual(const FlatSeries& r, int m);
/// [R, xi] - z q L_E R + z q R mu with q = -t - 1.
FlatSeries flat_p_residual(const FlatSeries& r, int m);
/// [R, xi] - z q L_E R + z q (L_E phi / phi) R mu with q = -t - 1.
FlatSeries de_comp_residual(const FlatSeries& r, int m, const LaurentSeries& phi);

/// z -> phi z on a flat series.
FlatSeries rescale_z(const FlatSeries& r, const LaurentSeries& phi);
FlatSeries series_inverse(const FlatSeries& r);
FlatSeries series_product(const FlatSeries& a, const FlatSeries& b);
bool series_is_zero(const FlatSeries& r);

struct IntermediateResult {
  FlatSeries r;       // R_P(z) R_A(z phi)^{-1}
  FlatSeries direct;  // solution of the comparison equation
  CheckReport report;
};
/// Airy point, lambda = 1: product construction, pole check below t^t_order,
/// residual of the comparison equation, and the direct order-by-order solve.
IntermediateResult intermediate_r(int m, std::size_t z_order, long t_order);

/// Direct solve of [R, xi] - z q L_E R + z q g R mu = 0, g = L_E phi / phi,
/// as t-series below t^t_order. The z^n (0,0) entry is fixed only up to a
/// constant; those constants are taken from `pin`.
FlatSeries solve_de_comp(int m, std::size_t z_order, long t_order, const LaurentSeries& phi,
                         const std::vector<BigRational>& pin);

/// P = R_A xi R_A^{-1} = xi + z P_1 + ...: support of P_i on k - j = i - 1 (mod m+1), P_i != 0.
CheckReport notpol_check(int m, std::size_t z_order);

/// z^1 coefficient sums for m = 2 against the closed form and the pole order.
CheckReport obstruction_m2();

/// Degree of the discriminant in t^1 after t^2 = ... = t^m = 0; the
/// higher-dimensional obstruction needs it to exceed 2.
unsigned airy_discriminant_degree(int m);

/// z -> phi z on a hat-form R-matrix.
qde::RMatrixA scaling_action(const qde::RMatrixA& r, const RF& phi);

}  // namespace cohft::comparison
