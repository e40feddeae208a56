#pragma once

#include <functional>
#include <vector>

#include "cohft/frobenius/models.hpp"

namespace cohft::qde {

using algebra::BigRational;
using algebra::Matrix;
using algebra::SeriesMatrix;
using algebra::VariableSet;
using frobenius::QSeries;
using frobenius::RF;

template <class K>
using Grid = std::vector<std::vector<K>>;

/// R-matrix over a rational-function field, stored in hat form
/// hat[n](i, k) = sqrt(Delta_i Delta_k) * R_n(i, k); R_0 = 1.
/// The grading gives each variable an integer weight and z the weight
/// z_weight; R_n then has weight -n * z_weight.
struct RMatrixA {
  VariableSet vars;
  std::size_t m = 0;
  std::vector<RF> roots;
  std::vector<RF> deltas;
  SeriesMatrix<RF> hat;
  std::vector<long> weights;
  long z_weight = 1;
  RF z_factor = RF(1);

  [[nodiscard]] std::size_t dim() const { return roots.size(); }
  [[nodiscard]] std::size_t order() const { return hat.order(); }
  /// R_n(i, i), free of square roots.
  [[nodiscard]] RF diagonal(std::size_t i, std::size_t n) const { return hat[n](i, i) / deltas[i]; }
};

/// Equivariant side: hat[n][i][k] is a q-series.
struct RMatrixP {
  VariableSet vars;
  std::size_t m = 0;
  std::size_t q_order = 0;
  std::vector<QSeries> roots;   // Q_i(q)
  std::vector<QSeries> deltas;
  std::vector<Grid<QSeries>> hat;
  std::vector<std::size_t> lambda_vars;  // variable indices of weight 1 in the coefficients

  [[nodiscard]] std::size_t dim() const { return roots.size(); }
  [[nodiscard]] std::size_t order() const { return hat.size(); }
};

/// Connection data in hat form for a derivation with d(Q_i) = s / Delta_i:
/// M = Psi_hat^{-1} d(Psi_hat), h = diag(d(Delta_i) / (2 Delta_i)).
template <class K>
struct Connection {
  Grid<K> M;
  std::vector<K> h;
};

Connection<RF> connection_a(const std::vector<RF>& roots, const std::vector<RF>& deltas);
Connection<QSeries> connection_pm(const std::vector<QSeries>& roots, const std::vector<QSeries>& deltas);

/// d/dt^1 on functions of the critical points: sum_{j<m} (-1/Delta_j) d/dQ_j.
RF d_t1(const RF& f, const std::vector<RF>& deltas, std::size_t m);

/// Solves d_t1(F) = G for F weighted-homogeneous of weight `target`.
/// Throws "homogeneity failed to fix constant" if F is not unique.
RF integrate_t1(const RF& G, const std::vector<RF>& deltas, std::size_t m, const std::vector<long>& weights,
                long target);

/// A-side: [R, xi] + z dR/dt^1 + z Psi^{-1} dPsi/dt^1 R = 0 with homogeneity.
/// Needs a symbolic model (critical points as variables).
RMatrixA solve_r_a(const frobenius::AmModel& model, std::size_t z_order);

/// Equivariant R-matrix in A-side coordinates: the model carries an extra
/// variable "lam" after Q_0..Q_{m-1}; the equation gets the factor
/// (t^1 + lam) = -q in front of the derivative terms. Weights: Q 1, lam m+1, z 1.
RMatrixA solve_r_pm_in_a(const frobenius::AmModel& model, std::size_t z_order);

/// Equivariant side with the q = 0 normalization exp(diag(b_j)).
RMatrixP solve_r_pm(const frobenius::PmModel& model, std::size_t z_order);

/// b_j(z) = sum_i B_{2i}/(2i(2i-1)) sum_{l != j} (z/(lambda_l - lambda_j))^{2i-1}.
std::vector<algebra::TruncatedSeries<RF>> bernoulli_exponents(const std::vector<RF>& lambdas, std::size_t z_order);

/// Defining equation residuals in hat form, one matrix per z-power 1..order-1.
SeriesMatrix<RF> qde_residual(const RMatrixA& r);
std::vector<Grid<QSeries>> qde_residual(const RMatrixP& r);

/// R(z) R^t(-z) - 1, conjugated to hat form: hat(z) diag(1/Delta) hat^t(-z) - diag(Delta).
SeriesMatrix<RF> verify_symplectic(const RMatrixA& r);
std::vector<Grid<QSeries>> verify_symplectic(const RMatrixP& r);

/// z dR/dz + L_E R in hat form, using the grading stored in r.
SeriesMatrix<RF> verify_homogeneity(const RMatrixA& r);
/// z dR/dz + ((m+1) q d/dq + sum lambda_i d/dlambda_i) R in hat form.
std::vector<Grid<QSeries>> verify_homogeneity(const RMatrixP& r);

bool is_zero(const std::vector<Grid<QSeries>>& residual);

}  // namespace cohft::qde
