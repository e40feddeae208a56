#pragma once

#include <vector>

#include "cohft/frobenius/models.hpp"
#include "cohft/qde/solver.hpp"

namespace cohft::oscillating {

using algebra::BigRational;
using algebra::TruncatedSeries;
using frobenius::QSeries;
using frobenius::RF;

/// Normalized saddle-point series sqrt(Delta_k) e^{-u_k/z} S_{mu k},
/// mu = 0..mu_max, as power series in z.
struct SaddleExpansion {
  std::size_t critical_index = 0;
  std::vector<TruncatedSeries<RF>> normalized;
  /// True when every odd power of (-z)^{1/2} dropped out.
  bool half_powers_cancel = true;
};

/// Gaussian-moment expansion around one critical point given the point Q,
/// Delta = f''(Q) and higher derivatives f^{(3)}(Q), f^{(4)}(Q), ...
SaddleExpansion saddle_expand_values(const RF& root, const RF& delta, const std::vector<RF>& higher_derivatives,
                                     std::size_t mu_max, std::size_t z_order);

/// Same, at critical point k of an A_{m+1} model.
SaddleExpansion saddle_expand_1d(const frobenius::AmModel& model, std::size_t k, std::size_t mu_max,
                                 std::size_t z_order);

/// hat(i, k) = sum_a c_a^{(i)} S_hat_{a,k} with sum_a c_a^{(i)} X^a = prod_{j != i}(X - Q_j).
/// Works for symbolic and specialized models.
qde::RMatrixA rmatrix_from_saddles_a(const frobenius::AmModel& model, std::size_t z_order);

struct FzSeries {
  std::vector<BigRational> a;
  std::vector<BigRational> b;
};
/// a_i = (6i)!/((3i)!(2i)!), b_i = a_i (1+6i)/(1-6i), i < order.
FzSeries fz_series(std::size_t order);

/// Coefficients c_n with S_hat_{0k} = sum_n c_n (z / Q_k^{m+2})^n in the
/// limit f' = X^{m+1} + t^1, from the ODE (z d/dt^1)^{m+1} S = -t^1 S.
std::vector<BigRational> airy_recursion(int m, std::size_t z_order);

/// Normalized sqrt(Delta_i) e^{-u_i/z} S_{0i} on the equivariant side:
/// entry n is the z^n coefficient as a q-series.
std::vector<QSeries> saddle_expand_pm(const frobenius::PmModel& model, std::size_t i, std::size_t z_order);

/// Covariance of the Gaussian on the hyperplane sum T_j = const at critical
/// point i, with w_j = P_i - lambda_j.
std::vector<std::vector<QSeries>> pm_covariance(const frobenius::PmModel& model, std::size_t i);

/// Hat-form R-matrix from the equivariant saddle expansions:
/// hat[n][k][i] = sum_a c_a^{(k)} (L^a S_hat_{0i})_n with
/// L F = z q dF/dq - z h_i F + Q_i F, h_i = q dDelta_i/dq / (2 Delta_i).
std::vector<qde::Grid<QSeries>> rmatrix_from_saddles_pm(const frobenius::PmModel& model, std::size_t z_order);

/// exp(b_j(z)) for each j, truncated.
std::vector<TruncatedSeries<RF>> bernoulli_diagonal(const std::vector<RF>& lambdas, std::size_t z_order);

/// exp(sum_i B_{2i}/(2i(2i-1)) (t z)^{2i-1}).
TruncatedSeries<RF> mumford_r_entry(const RF& t, std::size_t z_order);

}  // namespace cohft::oscillating
