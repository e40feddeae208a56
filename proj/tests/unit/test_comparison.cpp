#include "doctest.h"

#include "cohft/comparison/comparison.hpp"

using namespace cohft::comparison;
using cohft::algebra::make_rational;
using cohft::frobenius::make_am_model;

namespace {

bool same(const FlatSeries& a, const FlatSeries& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t n = 0; n < a.size(); ++n)
    if (!(a[n] == b[n])) return false;
  return true;
}

}  // namespace

TEST_CASE("phi coefficients and its differential equation") {
  auto p1 = phi_series(1, 6);
  CHECK(p1.inverse_coeffs[0] == 1);
  CHECK(p1.inverse_coeffs[1] == make_rational(3, 5));
  CHECK(p1.inverse_coeffs[2] == make_rational(3, 7));
  auto p2 = phi_series(2, 4);
  CHECK(p2.inverse_coeffs[1] == make_rational(4, 7));
  for (const auto& r : phi_ode_residual(p1)) CHECK(r == 0);
  for (const auto& r : phi_ode_residual(p2)) CHECK(r == 0);
  p1.inverse_coeffs[2] += make_rational(1, 100);
  CHECK(phi_ode_residual(p1)[2] != 0);

  // phi(1 - 3/5 t + ...)... phi * phi^{-1} = 1
  LaurentSeries phi = phi_at_unit_lambda(phi_series(1, 8), 8);
  CHECK(phi.coefficient(0) == 1);
  CHECK(phi.coefficient(1) == make_rational(3, 5));
}

TEST_CASE("Airy flat R-matrix: closed form against the symbolic solve") {
  for (int m : {1, 2}) {
    auto r = cohft::qde::solve_r_a(make_am_model(m), 4);
    FlatSeries flat = flat_at_airy(r);
    FlatSeries closed = airy_flat_r_a(m, 4);
    CHECK(same(flat, closed));
    CHECK(series_is_zero(flat_a_residual(closed, m)));
    CHECK_FALSE(series_is_zero(flat_p_residual(closed, m)));
  }
}

TEST_CASE("equivariant flat R-matrix at the Airy point") {
  for (int m : {1, 2}) {
    auto r = cohft::qde::solve_r_pm_in_a(make_am_model(m, {"lam"}), 4);
    FlatSeries flat = flat_at_airy(r);
    CHECK(series_is_zero(flat_p_residual(flat, m)));
    CHECK_FALSE(series_is_zero(flat_a_residual(flat, m)));
  }
}

TEST_CASE("series inverse and product") {
  FlatSeries a = airy_flat_r_a(2, 5);
  FlatSeries p = series_product(a, series_inverse(a));
  CHECK(p[0] == Matrix<LaurentSeries>::identity(3));
  for (std::size_t n = 1; n < p.size(); ++n) CHECK(p[n].is_zero());
}

TEST_CASE("equivariant limit to the A-side") {
  for (int m : {1, 2}) {
    auto rep = thm1_check(m, 4, 4);
    INFO(rep.to_json().dump());
    CHECK(rep.pass);
  }
}

TEST_CASE("intermediate R-matrix has no poles in t") {
  for (int m : {1, 2}) {
    auto res = intermediate_r(m, 3, 6);
    INFO(res.report.to_json().dump());
    CHECK(res.report.pass);
    CHECK(res.r[0] == Matrix<LaurentSeries>::identity(static_cast<std::size_t>(m) + 1));
  }
}

TEST_CASE("conjugated xi is not polynomial in z") {
  for (int m : {1, 2, 3}) {
    auto rep = notpol_check(m, 6);
    INFO(rep.to_json().dump());
    CHECK(rep.pass);
  }
}

TEST_CASE("m=2 obstruction") {
  auto rep = obstruction_m2();
  INFO(rep.to_json().dump());
  CHECK(rep.pass);
  for (int m : {1, 2, 3, 4}) CHECK(airy_discriminant_degree(m) == static_cast<unsigned>(m));
}

TEST_CASE("thm1 negative control and order-8 phi residual") {
  auto rep = thm1_check(1, 4, 4);
  CHECK(rep.details["unscaledCellsWithPositivePowers"].get<long>() > 0);
  for (const auto& r : phi_ode_residual(phi_series(2, 9))) CHECK(r == 0);
}

TEST_CASE("product without phi has poles") {
  auto rp = cohft::qde::solve_r_pm_in_a(make_am_model(1, {"lam"}), 3);
  auto bad = series_product(flat_at_airy(rp), series_inverse(airy_flat_r_a(1, 3)));
  long v = 0;
  for (const auto& x : bad)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) v = std::min(v, x(i, j).valuation());
  CHECK(v < 0);
}

TEST_CASE("scaling action") {
  using cohft::frobenius::RF;
  auto model = make_am_model(1);
  auto r = cohft::qde::solve_r_a(model, 4);
  auto same_r = scaling_action(r, RF(1));
  for (std::size_t n = 0; n < 4; ++n) CHECK(same_r.hat[n] == r.hat[n]);
  auto zero = scaling_action(r, RF(0));
  CHECK(zero.hat[0] == r.hat[0]);
  for (std::size_t n = 1; n < 4; ++n) CHECK(zero.hat[n].is_zero());

  cohft::qde::RMatrixA lin = r;
  RF a = RF::variable(0);
  for (std::size_t n = 0; n < 4; ++n) lin.hat[n] = cohft::algebra::Matrix<RF>(2, 2);
  lin.hat[0](0, 0) = RF(1);
  lin.hat[1](0, 0) = a;
  auto scaled = scaling_action(lin, RF(7));
  CHECK(scaled.hat[1](0, 0) == RF(7) * a);
  CHECK(scaled.hat[2](0, 0).is_zero());

  RF phi = RF(3) + RF::variable(1);
  CHECK(cohft::qde::verify_symplectic(scaling_action(r, phi)).is_zero());
}
