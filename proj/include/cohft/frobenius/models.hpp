#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohft/algebra/algebraic.hpp"
#include "cohft/algebra/matrix.hpp"
#include "cohft/algebra/rational_function.hpp"
#include "cohft/algebra/serialize.hpp"
#include "cohft/algebra/series.hpp"

namespace cohft::frobenius {

using algebra::BigRational;
using algebra::Matrix;
using algebra::Polynomial;
using algebra::VariableSet;
using RF = algebra::RationalFunction;
using QSeries = algebra::TruncatedSeries<RF>;

/// A_{m+1} model in root coordinates: the polynomial variables x_0..x_{m-1}
/// are the critical points Q_0..Q_{m-1}, and Q_m = -(Q_0 + ... + Q_{m-1}).
/// Any extra variables (e.g. "lam") follow at indices m, m+1, ...
/// A specialized model has rational roots instead.
struct AmModel {
  int m = 0;
  bool symbolic = true;
  VariableSet vars;
  std::vector<RF> roots;    // Q_0..Q_m
  std::vector<RF> t;        // t^1..t^m
  std::vector<RF> fprime;   // f'(X) low to high, monic of degree m+1
  std::vector<RF> deltas;   // Delta_i = f''(Q_i)
  RF disc;                  // prod Delta_i
  std::vector<BigRational> euler_weights;  // (m+2-mu)/(m+2), mu = 1..m
};

AmModel make_am_model(int m, const std::vector<std::string>& extra_vars = {});
/// Specialized model with the given rational critical points (sum zero).
AmModel make_am_model_at(const std::vector<BigRational>& roots);

/// f'(X) = X^{m+1} + sum (mu+1) t^{mu+1} X^mu with t^1..t^m the variables 0..m-1.
std::vector<RF> fprime_in_t(int m);
VariableSet t_variables(int m);

/// Product in k[X]/(f'), arguments given by coefficients low to high.
std::vector<RF> quantum_product(const std::vector<RF>& a, const std::vector<RF>& b, const std::vector<RF>& relation);
/// Coefficient of X^m in a*b mod f'.
RF residue_pairing(const std::vector<RF>& a, const std::vector<RF>& b, const std::vector<RF>& relation);
/// Gram matrix of the residue pairing on 1, X, ..., X^m.
Matrix<RF> flat_metric(const std::vector<RF>& relation);

/// Delta_i as prod_{j != i}(Q_i - Q_j); checks it against f''(Q_i) and
/// throws "non-semisimple point" if some Delta_i vanishes.
std::vector<RF> build_deltas(const std::vector<RF>& roots, const std::vector<RF>& fprime);
/// Root-free discriminant of f' in the t variables, signed so that it equals
/// prod Delta_i (sign fixed by comparison at a split specialization).
Polynomial discriminant_in_t(int m);

/// Transition data between normalized idempotents and 1, X, ..., X^m.
/// The normalized idempotent i has coordinates hat(.,i) * sign_i sqrt(Delta_i),
/// where hat(a, i) is the X^a coefficient of prod_{j != i}(X - Q_j)/Delta_i.
struct PsiMatrix {
  Matrix<RF> hat;
  std::vector<RF> deltas;
  std::vector<int> branch;  // +1 or -1 per column
};
PsiMatrix build_psi(const std::vector<RF>& roots, const std::vector<RF>& deltas, const std::vector<int>& branch);
/// Inverse of the hat part: the Vandermonde matrix (Q_i^a).
Matrix<RF> psi_hat_inverse(const std::vector<RF>& roots);
/// Coefficients (low to high) of prod_{j != i}(X - Q_j).
std::vector<RF> cofactor_polynomial(const std::vector<RF>& roots, std::size_t i);
/// True iff Psi^t eta Psi = 1, i.e. hat^t eta hat = diag(1/Delta).
bool psi_is_orthonormal(const PsiMatrix& psi, const Matrix<RF>& eta);

/// Equivariant P^m model: roots P_i(q) of prod (X - lambda_j) = q as
/// q-series with P_i(0) = lambda_i.
struct PmModel {
  int m = 0;
  VariableSet vars;              // lambda variables (and "q" for exact products)
  std::vector<RF> lambdas;
  std::size_t q_order = 0;
  std::vector<QSeries> P;
  std::vector<QSeries> Q;        // P_i - lambda_bar
  std::vector<QSeries> deltas;   // prod_{j != i}(P_i - P_j)
  Matrix<RF> eta;                // Poincare pairing on (H - lambda_bar)^a
  RF lambda_bar;
};

/// Symbolic lambdas named lam0..lamm (variables 0..m) and q (variable m+1).
PmModel make_pm_model(int m, std::size_t q_order);
/// Given lambda values (rational functions in the model variables).
PmModel make_pm_model(int m, std::vector<RF> lambdas, VariableSet vars, std::size_t q_order);

/// prod (X + lambda_bar - lambda_i) - q, low to high, in X = H - lambda_bar.
std::vector<RF> pm_relation(const std::vector<RF>& lambdas, const RF& q);

/// Matchup: t^1..t^m with X^{m+1} + sum (mu+1) t^{mu+1} X^mu = prod(X + lambda_bar - lambda_i) - q,
/// plus lambda = -prod(lambda_bar - lambda_i), so that t^1 = -q - lambda.
struct Matchup {
  std::vector<RF> t;
  RF lambda;
};
Matchup matchup_phi(int m, const std::vector<RF>& lambdas, const RF& q);

/// TQFT value on normalized idempotents: Delta_i^{(2g-2+n)/2} if all indices
/// equal i (n >= 1), 0 otherwise; for n = 0 the sum of Delta_j^{g-1}.
/// Half-integer powers live in the extension s^2 = Delta_i.
using SqrtExt = algebra::AlgebraicElement<RF>;
SqrtExt tqft_value(int g, const std::vector<std::size_t>& indices, const std::vector<RF>& deltas);

/// Model specification {"side": "A"|"P", "m": int, "t": [...]|null,
/// "lambda": [...]|null, "qOrder": int}. For side A, "t" may hold the
/// rational critical points under the key "roots" instead.
struct ModelSpec {
  char side = 'A';
  int m = 1;
  std::optional<std::vector<BigRational>> roots;
  std::optional<std::vector<BigRational>> lambdas;
  std::size_t q_order = 1;
};
ModelSpec model_spec_from_json(const algebra::Json& j);

}  // namespace cohft::frobenius
