#include "doctest.h"

#include "cohft/oscillating/saddle.hpp"

using namespace cohft::oscillating;
using cohft::algebra::make_rational;
using cohft::algebra::Matrix;
using cohft::algebra::Polynomial;
using cohft::frobenius::make_am_model;
using cohft::frobenius::make_am_model_at;
using cohft::frobenius::make_pm_model;

namespace {

RF rat(long a, long b = 1) { return RF(make_rational(a, b)); }

}  // namespace

TEST_CASE("Faber-Zagier coefficients") {
  auto fz = fz_series(3);
  CHECK(fz.a[0] == 1);
  CHECK(fz.b[0] == 1);
  CHECK(fz.a[1] == 60);  // 720 / (6 * 2)
  CHECK(fz.a[2] == 27720);
  CHECK(fz.b[1] == -84);
}

TEST_CASE("m=1 saddle series are the A and B series") {
  auto model = make_am_model(1);
  auto fz = fz_series(9);
  for (std::size_t k = 0; k < 2; ++k) {
    auto s = saddle_expand_1d(model, k, 1, 9);
    CHECK(s.half_powers_cancel);
    RF w = rat(-1, 72) * model.deltas[k].pow(-3);
    for (std::size_t n = 0; n < 9; ++n) {
      CHECK(s.normalized[0][n] == RF(fz.a[n]) * w.pow(static_cast<long>(n)));
      CHECK(s.normalized[1][n] == model.roots[k] * RF(fz.b[n]) * w.pow(static_cast<long>(n)));
    }
  }
}

TEST_CASE("normalization and non-semisimple input") {
  auto s = saddle_expand_1d(make_am_model(2), 1, 2, 3);
  CHECK(s.normalized[0][0] == RF(1));
  CHECK_THROWS(saddle_expand_values(RF::variable(0), RF(0), {}, 0, 2));
}

TEST_CASE("saddle R-matrix equals the QDE solution, m=1 and m=2") {
  for (auto [m, order] : {std::pair{1, 9}, std::pair{2, 6}}) {
    auto model = make_am_model(m);
    auto a = cohft::qde::solve_r_a(model, static_cast<std::size_t>(order));
    auto b = rmatrix_from_saddles_a(model, static_cast<std::size_t>(order));
    for (std::size_t n = 0; n < a.order(); ++n) CHECK(a.hat[n] == b.hat[n]);
  }
}

TEST_CASE("saddle R-matrix at a specialized point") {
  auto model = make_am_model(2);
  auto a = cohft::qde::solve_r_a(model, 3);
  std::vector<BigRational> pt{1, 2};
  auto b = rmatrix_from_saddles_a(make_am_model_at({1, 2, -3}), 3);
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) CHECK(RF(a.hat[n](i, k).evaluate(pt)) == b.hat[n](i, k));
}

TEST_CASE("Airy recursion") {
  auto fz = fz_series(8);
  auto c = airy_recursion(1, 8);
  for (std::size_t n = 0; n < 8; ++n) CHECK(c[n] == fz.a[n] * cohft::algebra::pow(make_rational(-1, 576), n));
  // m=2 against the Gaussian expansion with f' = X^3 + t^1, Q = x
  RF x = RF::variable(0);
  auto s = saddle_expand_values(x, rat(3) * x * x, {rat(6) * x, rat(6)}, 0, 4);
  auto c2 = airy_recursion(2, 4);
  CHECK(c2[0] == 1);
  for (std::size_t n = 0; n < 4; ++n) CHECK(s.normalized[0][n] == RF(c2[n]) * x.pow(-4 * static_cast<long>(n)));
}

TEST_CASE("Bernoulli diagonal and Mumford entry") {
  RF l0 = RF::variable(0), l1 = RF::variable(1);
  auto d = bernoulli_diagonal({l0, l1}, 4);
  CHECK(d[0][1] == rat(1, 12) * (l1 - l0).inverse());
  CHECK(d[0][2] == rat(1, 288) * (l1 - l0).pow(-2));
  CHECK(bernoulli_diagonal({l0}, 4)[0] == cohft::algebra::TruncatedSeries<RF>::constant(RF(1), 4));
  RF t = RF::variable(0);
  auto r = mumford_r_entry(t, 4);
  CHECK(r[1] == rat(1, 12) * t);
  CHECK(r[2] == rat(1, 288) * t * t);
  CHECK(mumford_r_entry(RF(0), 4) == cohft::algebra::TruncatedSeries<RF>::constant(RF(1), 4));
}

TEST_CASE("equivariant covariance is symmetric with zero row sums") {
  auto model = make_pm_model(2, {rat(0), rat(1), rat(3)}, cohft::algebra::VariableSet({"q"}), 3);
  for (std::size_t i = 0; i < 3; ++i) {
    auto s = pm_covariance(model, i);
    for (std::size_t k = 0; k < 3; ++k) {
      QSeries sum(3);
      for (std::size_t l = 0; l < 3; ++l) {
        CHECK(s[k][l] == s[l][k]);
        sum += s[k][l];
      }
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("equivariant saddle at q^0 is the Stirling limit") {
  for (int m : {1, 2}) {
    auto model = make_pm_model(m, 1);
    auto lim = bernoulli_diagonal(model.lambdas, 5);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i) {
      auto s = saddle_expand_pm(model, i, 5);
      for (std::size_t n = 0; n < 5; ++n) CHECK(s[n][0] == lim[i][n]);
    }
  }
}

TEST_CASE("equivariant saddle R-matrix equals the QDE solution") {
  auto model = make_pm_model(1, 3);
  auto a = cohft::qde::solve_r_pm(model, 3);
  auto b = rmatrix_from_saddles_pm(model, 3);
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) CHECK(a.hat[n][i][k] == b[n][i][k]);
}

TEST_CASE("specialized m=3 saddle R-matrix is symplectic") {
  auto r = rmatrix_from_saddles_a(make_am_model_at({1, 2, 4, -7}), 6);
  CHECK(r.hat[0] == Matrix<RF>::diagonal(r.deltas));
  CHECK(cohft::qde::verify_symplectic(r).is_zero());
  r.hat[2](0, 1) = r.hat[2](0, 1) + RF(1);
  CHECK_FALSE(cohft::qde::verify_symplectic(r).is_zero());
}
