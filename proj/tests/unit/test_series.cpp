#include <cmath>
#include <functional>
#include <random>

#include "doctest.h"

#include "cohft/algebra/algebraic.hpp"
#include "cohft/algebra/combinatorics.hpp"
#include "cohft/algebra/laurent.hpp"
#include "cohft/algebra/serialize.hpp"

using namespace cohft::algebra;

using QSeries = TruncatedSeries<BigRational>;
using RF = RationalFunction;

TEST_CASE("series_exp examples") {
  CHECK(series_exp(QSeries(3)) == QSeries({1}, 3));
  CHECK(series_exp(QSeries::variable(3)) == QSeries({1, 1, BigRational(1, 2)}, 3));
  // (z + z^2): multiply out exp term by term
  QSeries s({0, 1, 1}, 3);
  QSeries oracle = QSeries::constant(1, 3) + s + (s * s).scaled(BigRational(1, 2));
  CHECK(series_exp(s) == oracle);
  CHECK(series_exp(s)[2] == BigRational(3, 2));
  CHECK_THROWS_AS(series_exp(QSeries({1, 1}, 3)), AlgebraError);
}

TEST_CASE("series_exp and series_log are inverse") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigRational> c{0};
    for (int i = 1; i < 9; ++i) c.push_back(make_rational(d(rng), 1 + trial));
    QSeries s(c, 9);
    CHECK(series_log(series_exp(s)) == s);
  }
}

TEST_CASE("mixed truncation orders take the minimum") {
  QSeries a({1, 2, 3, 4}, 4), b({1, 1}, 2);
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK((a * QSeries::constant(2)).order() == 4);
}

TEST_CASE("bernoulli numbers match the series x/(e^x - 1)") {
  // oracle: invert (e^x - 1)/x = sum x^k/(k+1)!
  const unsigned n = 12;
  std::vector<BigRational> c;
  for (unsigned k = 0; k < n; ++k) c.push_back(BigRational(1) / BigRational(factorial(k + 1)));
  QSeries inv = QSeries(c, n).inverse();
  for (unsigned k = 0; k < n; ++k) CHECK(bernoulli(k) == inv[k] * BigRational(factorial(k)));
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == BigRational(-1, 2));
  CHECK(bernoulli(2) == BigRational(1, 6));
  CHECK(bernoulli(4) == BigRational(-1, 30));
}

TEST_CASE("gaussian moments against numeric quadrature") {
  CHECK(gaussian_moment(0) == 1);
  CHECK(gaussian_moment(3) == 0);
  for (unsigned k = 0; k <= 8; ++k) {
    // composite Simpson on [-14, 14]
    const int steps = 20000;
    long double h = 28.0L / steps, acc = 0;
    for (int i = 0; i <= steps; ++i) {
      long double x = -14.0L + h * i;
      long double w = (i == 0 || i == steps) ? 1 : (i % 2 ? 4 : 2);
      acc += w * std::pow(x, static_cast<long double>(k)) * std::exp(-x * x / 2);
    }
    acc *= h / 3 / std::sqrt(2 * 3.14159265358979323846264338327950288L);
    CHECK(std::fabs(static_cast<double>(acc) - gaussian_moment(k).get_d()) < 1e-9);
  }
  CHECK(gaussian_moment(6) == 15);
}

namespace {

// Exhaustive Isserlis oracle: enumerate perfect matchings of the variable list.
BigRational pairing_sum(std::vector<std::size_t> items, const Matrix<BigRational>& cov) {
  if (items.empty()) return 1;
  if (items.size() % 2) return 0;
  std::size_t first = items[0];
  BigRational acc = 0;
  for (std::size_t j = 1; j < items.size(); ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < items.size(); ++k)
      if (k != j) rest.push_back(items[k]);
    acc += cov(first, items[j]) * pairing_sum(rest, cov);
  }
  return acc;
}

}  // namespace

TEST_CASE("wick moments") {
  Matrix<BigRational> s(2, 2);
  s(0, 0) = 3;
  s(0, 1) = s(1, 0) = BigRational(-2, 7);
  s(1, 1) = 5;
  CHECK(wick_moment<BigRational>({1, 1}, s) == s(0, 1));
  CHECK(wick_moment<BigRational>({2, 0}, s) == s(0, 0));
  CHECK(wick_moment<BigRational>({2, 2}, s) == s(0, 0) * s(1, 1) + 2 * s(0, 1) * s(0, 1));
  CHECK(wick_moment<BigRational>({1, 2}, s) == 0);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-6, 6);
  Matrix<BigRational> c(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= i; ++j) c(i, j) = c(j, i) = make_rational(d(rng), 1 + i + j);
  WickMoments<BigRational> w(c);
  for (unsigned a = 0; a <= 8; ++a)
    for (unsigned b = 0; a + b <= 8; ++b)
      for (unsigned e = 0; a + b + e <= 8; ++e) {
        std::vector<std::size_t> items;
        for (unsigned k = 0; k < a; ++k) items.push_back(0);
        for (unsigned k = 0; k < b; ++k) items.push_back(1);
        for (unsigned k = 0; k < e; ++k) items.push_back(2);
        CHECK(w({a, b, e}) == pairing_sum(items, c));
      }
}

TEST_CASE("power sums over roots") {
  const Polynomial t = Polynomial::variable(0), t2 = Polynomial::variable(1), X = Polynomial::variable(2);
  CHECK(power_sum_over_roots(X * X + t, 2, 2) == RF(-2 * t));
  CHECK(power_sum_over_roots(X * X + t, 2, 1) == RF(0));
  // X^3 + 2 t2 X + t: p_2 = e_1^2 - 2 e_2 with e_1 = 0, e_2 = 2 t2
  CHECK(power_sum_over_roots(X.pow(3) + 2 * t2 * X + t, 2, 2) == RF(-4 * t2));
  CHECK(power_sum_over_roots(X * X + t, 2, -2) == RF(Polynomial(-2), t));
  CHECK_THROWS_WITH_AS(power_sum_over_roots(X * X + X, 2, -1), "pole at zero root", AlgebraError);

  // split polynomials: direct root sums
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-7, 7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigRational> roots;
    int deg = 1 + trial % 3;
    for (int i = 0; i < deg; ++i) {
      int r = d(rng);
      roots.push_back(make_rational(r == 0 ? 1 : r, 1 + trial % 4));
    }
    Polynomial p(1);
    for (const auto& r : roots) p = p * (X - Polynomial(r));
    for (long k = -4; k <= 6; ++k) {
      BigRational direct = 0;
      for (const auto& r : roots) direct += pow(r, k);
      CHECK(power_sum_over_roots(p, 2, k) == RF(direct));
    }
  }
}

TEST_CASE("newton_root_series") {
  const RF l0 = RF::variable(0), l1 = RF::variable(1);
  // (X - l0)(X - l1) = q
  std::vector<RF> f{l0 * l1, -(l0 + l1), RF(1)};
  auto p = newton_root_series(f, l0, 3);
  RF d = l0 - l1;
  CHECK(p[0] == l0);
  CHECK(p[1] == d.inverse());
  CHECK(p[2] == -(d.pow(3).inverse()));
  // substituting back gives q + O(q^N)
  auto p6 = newton_root_series(f, l0, 6);
  auto back = (p6 - TruncatedSeries<RF>::constant(l0)) * (p6 - TruncatedSeries<RF>::constant(l1));
  CHECK(back == TruncatedSeries<RF>::variable(6));

  // lambda = (1, -1): P_0 = 1 + q/2 - q^2/8; numeric Newton oracle at small q
  std::vector<RF> g{RF(-1), RF(0), RF(1)};
  auto s = newton_root_series(g, RF(1), 3);
  CHECK(s[1] == RF(BigRational(1, 2)));
  CHECK(s[2] == RF(BigRational(-1, 8)));
  for (double q : {1e-2, 3e-3}) {
    double x = 1;
    for (int it = 0; it < 40; ++it) x -= (x * x - 1 - q) / (2 * x);
    double approx = 1 + q / 2 - q * q / 8;
    CHECK(std::fabs(x - approx) < 2 * q * q * q);
  }
  CHECK_THROWS_WITH_AS(newton_root_series({RF(0), RF(0), RF(1)}, RF(0), 3), "non-simple root", AlgebraError);
  // constant q-part only
  CHECK(newton_root_series(f, l0, 1) == TruncatedSeries<RF>({l0}, 1));
}

TEST_CASE("algebraic element arithmetic") {
  const RF t = RF::variable(0), u = RF::variable(1);
  // s^3 + 2u s + t
  auto ext = AlgebraicElement<RF>::make_extension("Q", {t, RF(2) * u, RF(0), RF(1)});
  auto s = AlgebraicElement<RF>::generator(ext);
  CHECK((s * s * s + AlgebraicElement<RF>(RF(2) * u) * s + AlgebraicElement<RF>(t)).is_zero());
  auto a = s * s + AlgebraicElement<RF>(u), b = s + AlgebraicElement<RF>(t);
  CHECK(a * b == b * a);
  CHECK((a * b).coordinates().size() == 3);
  CHECK(a * a.inverse() == AlgebraicElement<RF>(1));
  CHECK(s.trace() == RF(0));
  CHECK((s * s).trace() == RF(-4) * u);
}

TEST_CASE("laurent series inverse and precision") {
  // 1/(t^-1 + 1) = t - t^2 + ...
  LaurentSeries a = LaurentSeries::monomial(1, -1) + LaurentSeries(1);
  LaurentSeries inv = a.inverse(5);
  CHECK(inv.valuation() == 1);
  CHECK(inv.coefficient(2) == -1);
  CHECK(inv.precision() == 6);
  CHECK((a * inv).with_precision(5) == LaurentSeries(1).with_precision(5));
  CHECK(LaurentSeries::monomial(3, -2).inverse() == LaurentSeries::monomial(BigRational(1, 3), 2));
}

TEST_CASE("json serialization of rationals") {
  BigRational r(-7, 3);
  auto j = to_json(r);
  CHECK(j["n"] == "-7");
  CHECK(j["d"] == "3");
  CHECK(rational_from_json(j) == r);
}
