#include <chrono>

#include "doctest.h"

#include "cohft/algebra/combinatorics.hpp"
#include "cohft/qde/solver.hpp"

using namespace cohft::qde;
using cohft::algebra::AlgebraError;
using cohft::algebra::BigInteger;
using cohft::algebra::make_rational;
using cohft::algebra::Polynomial;
using cohft::frobenius::make_am_model;
using cohft::frobenius::make_pm_model;

namespace {

bool all_zero(const SeriesMatrix<RF>& s) { return s.is_zero(); }

// Strip the linear factors Q_i - Q_j; true if only a constant remains.
bool only_root_gap_poles(const RF& f, const std::vector<RF>& roots) {
  Polynomial den = f.denominator();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Polynomial gap = (roots[i] - roots[j]).numerator();
      while (auto q = den.divide_exact(gap)) den = *q;
    }
  return den.is_constant();
}

BigRational fz_a(unsigned i) {
  return BigRational(cohft::algebra::factorial(6 * i)) /
         BigRational(cohft::algebra::factorial(3 * i) * cohft::algebra::factorial(2 * i));
}

}  // namespace

TEST_CASE("connection matches the direct conjugation") {
  for (int m = 1; m <= 3; ++m) {
    auto model = make_am_model(m);
    auto conn = connection_a(model.roots, model.deltas);
    auto psi = cohft::frobenius::build_psi(model.roots, model.deltas, std::vector<int>(model.roots.size(), 1));
    auto vinv = cohft::frobenius::psi_hat_inverse(model.roots);
    auto dpsi = psi.hat.map([&](const RF& x) { return d_t1(x, model.deltas, static_cast<std::size_t>(m)); });
    auto direct = vinv * dpsi;
    for (std::size_t i = 0; i < model.roots.size(); ++i) {
      for (std::size_t k = 0; k < model.roots.size(); ++k) CHECK(conn.M[i][k] == direct(i, k));
      CHECK(conn.h[i] == d_t1(model.deltas[i], model.deltas, static_cast<std::size_t>(m)) / (RF(2) * model.deltas[i]));
    }
    // d_t1 of t^1 is 1, of t^mu (mu > 1) is 0
    CHECK(d_t1(model.t[0], model.deltas, static_cast<std::size_t>(m)) == RF(1));
    for (std::size_t mu = 1; mu < model.t.size(); ++mu)
      CHECK(d_t1(model.t[mu], model.deltas, static_cast<std::size_t>(m)).is_zero());
  }
}

TEST_CASE("order one is the identity") {
  auto r = solve_r_a(make_am_model(2), 1);
  REQUIRE(r.order() == 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) CHECK(r.hat[0](i, k) == (i == k ? r.deltas[i] : RF(0)));
}

TEST_CASE("m=1 solution reproduces the Faber-Zagier series") {
  auto model = make_am_model(1);
  auto r = solve_r_a(model, 9);
  for (unsigned n = 0; n <= 8; ++n) {
    BigRational a = fz_a(n), b = a * BigRational(1 + 6 * n) / BigRational(1 - 6 * static_cast<long>(n));
    for (std::size_t k = 0; k < 2; ++k) {
      RF w = RF(make_rational(-1, 72)) * model.deltas[k].pow(-3);
      RF wn = w.pow(n);
      CHECK(r.diagonal(k, n) == RF((a + b) / 2) * wn);
      CHECK(r.hat[n](1 - k, k) == model.roots[k] * RF(b - a) * wn);
    }
  }
  CHECK(all_zero(qde_residual(r)));
  CHECK(all_zero(verify_symplectic(r)));
  CHECK(all_zero(verify_homogeneity(r)));
}

TEST_CASE("symplectic check catches a sign flip") {
  auto r = solve_r_a(make_am_model(1), 4);
  CHECK(all_zero(verify_symplectic(r)));
  r.hat[1](0, 1) = -r.hat[1](0, 1);
  CHECK_FALSE(all_zero(verify_symplectic(r)));
  CHECK_FALSE(all_zero(qde_residual(r)));
}

TEST_CASE("m=2 and m=3 solutions satisfy all conditions") {
  for (auto [m, order] : {std::pair{2, 7}, std::pair{3, 4}}) {
    auto model = make_am_model(m);
    auto r = solve_r_a(model, static_cast<std::size_t>(order));
    CHECK(all_zero(qde_residual(r)));
    CHECK(all_zero(verify_symplectic(r)));
    CHECK(all_zero(verify_homogeneity(r)));
    for (std::size_t n = 0; n < r.order(); ++n)
      for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t k = 0; k < r.dim(); ++k) CHECK(only_root_gap_poles(r.hat[n](i, k), model.roots));
  }
}

TEST_CASE("identity has zero residuals") {
  RMatrixA r;
  auto model = make_am_model(1);
  r.m = 1;
  r.roots = model.roots;
  r.deltas = model.deltas;
  r.weights = {1};
  r.z_weight = 3;
  r.hat = SeriesMatrix<RF>(2, 3);
  r.hat[0] = Matrix<RF>::diagonal(model.deltas);
  CHECK(all_zero(verify_symplectic(r)));
  CHECK(all_zero(verify_homogeneity(r)));
}

TEST_CASE("integration rejects a non-integrable input") {
  auto model = make_am_model(1);
  // 1/Q^2 is not d/dt^1 of anything homogeneous of weight -3
  CHECK_THROWS_AS(integrate_t1(RF(Polynomial(1), Polynomial::variable(0).pow(2)), model.deltas, 1, {1}, -3),
                  AlgebraError);
  // d/dt^1 of Q^-3 is 3 Q^-4 / Delta = (3/2) Q^-5
  RF g = RF(Polynomial(make_rational(3, 2)), Polynomial::variable(0).pow(5));
  CHECK(integrate_t1(g, model.deltas, 1, {1}, -3) == RF(Polynomial(1), Polynomial::variable(0).pow(3)));
}

TEST_CASE("equivariant solver: classical limit and residuals") {
  auto model = make_pm_model(1, 4);
  auto r = solve_r_pm(model, 4);
  const RF l0 = RF::variable(0), l1 = RF::variable(1);
  RF twelfth(make_rational(1, 12));
  CHECK(r.hat[1][0][0][0] / r.deltas[0][0] == twelfth * (l1 - l0).inverse());
  CHECK(r.hat[1][1][1][0] / r.deltas[1][0] == twelfth * (l0 - l1).inverse());
  for (std::size_t n = 0; n < 4; ++n) {
    CHECK(r.hat[n][0][1][0].is_zero());
    CHECK(r.hat[n][1][0][0].is_zero());
  }
  CHECK(is_zero(qde_residual(r)));
  CHECK(is_zero(verify_symplectic(r)));
  CHECK(is_zero(verify_homogeneity(r)));
  // q^1 entries are present
  CHECK_FALSE(r.hat[1][0][1][1].is_zero());
}

TEST_CASE("equivariant solver m=2") {
  auto model = make_pm_model(2, 3);
  auto r = solve_r_pm(model, 4);
  CHECK(is_zero(qde_residual(r)));
  CHECK(is_zero(verify_symplectic(r)));
  CHECK(is_zero(verify_homogeneity(r)));
  auto b = bernoulli_exponents(model.lambdas, 4);
  for (std::size_t j = 0; j < 3; ++j) {
    auto e = cohft::algebra::series_exp(b[j]);
    for (std::size_t n = 0; n < 4; ++n) {
      CHECK(r.hat[n][j][j][0] == e[n] * model.deltas[j][0]);
      for (std::size_t k = 0; k < 3; ++k)
        if (k != j) CHECK(r.hat[n][j][k][0].is_zero());
    }
  }
}
