#include <random>

#include "doctest.h"

#include "cohft/frobenius/models.hpp"

using namespace cohft::frobenius;
using cohft::algebra::AlgebraError;
using cohft::algebra::make_rational;

namespace {

std::vector<RF> monomial(std::size_t a) {
  std::vector<RF> c(a + 1, RF(0));
  c[a] = RF(1);
  return c;
}

RF at(const std::vector<RF>& c, std::size_t i) { return i < c.size() ? c[i] : RF(0); }

}  // namespace

TEST_CASE("residue pairing examples") {
  auto f1 = fprime_in_t(1);
  const RF t1 = RF::variable(0);
  CHECK(residue_pairing(monomial(0), monomial(0), f1) == RF(0));
  CHECK(residue_pairing(monomial(0), monomial(1), f1) == RF(1));
  CHECK(residue_pairing(monomial(1), monomial(1), f1) == RF(0));
  // X^2 = -t1 in the ring, so the X-coefficient vanishes; sum over roots Q^2/(2Q) - Q^2/(2Q) agrees
  CHECK(residue_pairing(monomial(2), monomial(0), f1) == RF(0));
  CHECK(residue_pairing(monomial(2), monomial(1), f1) == -t1);
  auto f2 = fprime_in_t(2);
  CHECK(residue_pairing(monomial(1), monomial(1), f2) == RF(1));
}

TEST_CASE("residue pairing equals the sum over critical points") {
  for (int m = 1; m <= 3; ++m) {
    auto model = make_am_model(m);
    auto eta = flat_metric(model.fprime);
    for (std::size_t a = 0; a <= static_cast<std::size_t>(m); ++a)
      for (std::size_t b = 0; b <= static_cast<std::size_t>(m); ++b) {
        RF sum(0);
        for (std::size_t i = 0; i <= static_cast<std::size_t>(m); ++i)
          sum += model.roots[i].pow(static_cast<long>(a + b)) * model.deltas[i].inverse();
        CHECK(eta(a, b) == sum);
        // antidiagonal shape
        if (a + b < static_cast<std::size_t>(m)) CHECK(eta(a, b).is_zero());
        if (a + b == static_cast<std::size_t>(m)) CHECK(eta(a, b) == RF(1));
        if (a + b == static_cast<std::size_t>(m) + 1) CHECK(eta(a, b).is_zero());
      }
  }
}

TEST_CASE("flat metric has no t1 dependence") {
  for (int m = 1; m <= 4; ++m) {
    auto eta = flat_metric(fprime_in_t(m));
    for (std::size_t a = 0; a < eta.rows(); ++a)
      for (std::size_t b = 0; b < eta.cols(); ++b) CHECK(eta(a, b).derivative(0).is_zero());
  }
}

TEST_CASE("quantum products") {
  const RF t1 = RF::variable(0), t2 = RF::variable(1);
  auto xx = quantum_product(monomial(1), monomial(1), fprime_in_t(1));
  CHECK(xx[0] == -t1);
  CHECK(xx[1].is_zero());
  auto x3 = quantum_product(monomial(2), monomial(1), fprime_in_t(2));
  // long division of X^3 by X^3 + 2 t2 X + t1 by hand
  CHECK(x3[0] == -t1);
  CHECK(x3[1] == RF(-2) * t2);
  CHECK(x3[2].is_zero());

  // P^1 side in H: (H - l0)(H - l1) = q
  const RF l0 = RF::variable(0), l1 = RF::variable(1), q = RF::variable(2);
  std::vector<RF> rel{l0 * l1 - q, -(l0 + l1), RF(1)};
  auto p = quantum_product({-l0, RF(1)}, {-l1, RF(1)}, rel);
  CHECK(p[0] == q);
  CHECK(p[1].is_zero());
}

TEST_CASE("deltas and discriminant") {
  auto m1 = make_am_model(1);
  const RF Q = RF::variable(0);
  CHECK(m1.deltas[0] == RF(2) * Q);
  // t1 = -Q^2 for roots (Q, -Q); disc = 4 t1
  CHECK(m1.t[0] == -(Q * Q));
  CHECK(m1.disc == RF(4) * m1.t[0]);
  CHECK(discriminant_in_t(1) == RF::variable(0).numerator() * 4);

  // Airy limit m = 2: at t2 = 0 the roots are Q, zeta Q, zeta^2 Q and Delta = 3 Q^2;
  // checked through f''(Q) = 3Q^2 + 2 t2 at the symbolic model
  auto m2 = make_am_model(2);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(m2.deltas[i] == RF(3) * m2.roots[i] * m2.roots[i] + RF(2) * m2.t[1]);

  CHECK_THROWS_WITH_AS(make_am_model_at({1, 1, -2}), "non-semisimple point", AlgebraError);

  // resultant discriminant vs prod Delta at random split points
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int m = 1; m <= 3; ++m) {
    auto disc = discriminant_in_t(m);
    int tested = 0;
    while (tested < 6) {
      std::vector<BigRational> roots;
      BigRational s = 0;
      for (int i = 0; i < m; ++i) {
        roots.push_back(make_rational(d(rng), 1 + tested % 3));
        s += roots.back();
      }
      roots.push_back(-s);
      bool distinct = true;
      for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) distinct = distinct && roots[i] != roots[j];
      if (!distinct) continue;
      auto model = make_am_model_at(roots);
      std::vector<BigRational> point;
      for (const auto& t : model.t) point.push_back(t.constant_value());
      point.push_back(0);
      CHECK(disc.evaluate(point) == model.disc.constant_value());
      ++tested;
    }
  }
}

TEST_CASE("psi matrix") {
  auto m1 = make_am_model(1);
  auto psi = build_psi(m1.roots, m1.deltas, {1, 1});
  CHECK(psi.hat(0, 0) == -m1.roots[1] * m1.deltas[0].inverse());
  CHECK(psi.hat(1, 0) == m1.deltas[0].inverse());
  for (int m = 1; m <= 3; ++m) {
    auto model = make_am_model(m);
    auto p = build_psi(model.roots, model.deltas, std::vector<int>(static_cast<std::size_t>(m) + 1, 1));
    CHECK(psi_is_orthonormal(p, flat_metric(model.fprime)));
    auto prod = p.hat * psi_hat_inverse(model.roots);
    CHECK(prod == Matrix<RF>::identity(prod.rows()));
  }
  auto sp = make_am_model_at({make_rational(1, 2), 3, make_rational(-7, 2)});
  auto ps = build_psi(sp.roots, sp.deltas, {1, -1, 1});
  CHECK(psi_is_orthonormal(ps, flat_metric(sp.fprime)));
  CHECK_THROWS_AS(build_psi(sp.roots, sp.deltas, {1, 1}), AlgebraError);
}

TEST_CASE("idempotents sum to one and are orthogonal") {
  for (int m = 1; m <= 3; ++m) {
    auto model = make_am_model(m);
    std::size_t n = static_cast<std::size_t>(m) + 1;
    std::vector<std::vector<RF>> eps;
    std::vector<RF> sum(n, RF(0));
    for (std::size_t i = 0; i < n; ++i) {
      auto c = cofactor_polynomial(model.roots, i);
      for (auto& x : c) x *= model.deltas[i].inverse();
      for (std::size_t a = 0; a < n; ++a) sum[a] += at(c, a);
      eps.push_back(c);
    }
    CHECK(sum[0] == RF(1));
    for (std::size_t a = 1; a < n; ++a) CHECK(sum[a].is_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto p = quantum_product(eps[i], eps[j], model.fprime);
        for (std::size_t a = 0; a < n; ++a) CHECK(at(p, a) == (i == j ? at(eps[i], a) : RF(0)));
      }
  }
}

TEST_CASE("matchup") {
  const RF l0 = RF::variable(0), l1 = RF::variable(1), q = RF::variable(2);
  auto r = matchup_phi(1, {l0, l1}, q);
  RF expected = (l0 - l1) * (l0 - l1) * RF(make_rational(1, 4));
  CHECK(r.lambda == expected);
  CHECK(r.t[0] == -q - expected);
  auto eq = matchup_phi(2, {RF(5), RF(5), RF(5)}, q);
  CHECK(eq.lambda.is_zero());
  CHECK(eq.t[1].is_zero());
  CHECK(eq.t[0] == -q);
  auto m2 = matchup_phi(2, {RF(0), RF(1), RF(-1)}, q);
  CHECK(m2.t[1] == RF(make_rational(-1, 2)));
  CHECK(m2.t[0] == -q);
}

TEST_CASE("P side reduces to the A side under the matchup") {
  for (int m = 1; m <= 2; ++m) {
    std::vector<RF> lambdas;
    for (int i = 0; i <= m; ++i) lambdas.push_back(RF::variable(static_cast<std::size_t>(i)));
    const RF q = RF::variable(static_cast<std::size_t>(m) + 1);
    auto rel = pm_relation(lambdas, q);
    auto mt = matchup_phi(m, lambdas, q);
    // A-side relation with t substituted
    std::vector<RF> a_rel(static_cast<std::size_t>(m) + 2, RF(0));
    for (int mu = 0; mu < m; ++mu) a_rel[static_cast<std::size_t>(mu)] = RF(mu + 1) * mt.t[static_cast<std::size_t>(mu)];
    a_rel.back() = RF(1);
    for (std::size_t i = 0; i < rel.size(); ++i) CHECK(rel[i] == a_rel[i]);
    for (std::size_t a = 0; a <= static_cast<std::size_t>(m); ++a)
      for (std::size_t b = 0; b <= static_cast<std::size_t>(m); ++b) {
        CHECK(residue_pairing(monomial(a), monomial(b), rel) == residue_pairing(monomial(a), monomial(b), a_rel));
        auto p1 = quantum_product(monomial(a), monomial(b), rel), p2 = quantum_product(monomial(a), monomial(b), a_rel);
        for (std::size_t k = 0; k < p1.size(); ++k) CHECK(p1[k] == p2[k]);
      }
  }
}

TEST_CASE("P side model") {
  auto model = make_pm_model(1, 4);
  const RF l0 = RF::variable(0), l1 = RF::variable(1);
  CHECK(model.P[0][0] == l0);
  CHECK(model.P[1][0] == l1);
  // prod (P_i - lambda_j) = q + O(q^4)
  for (std::size_t i = 0; i < 2; ++i) {
    auto prod = (model.P[i] - QSeries::constant(l0)) * (model.P[i] - QSeries::constant(l1));
    CHECK(prod == QSeries::variable(4));
  }
  CHECK(model.deltas[0][0] == l0 - l1);
  CHECK(model.eta(0, 1) == RF(1));
  CHECK_THROWS_WITH_AS(make_pm_model(1, {RF(2), RF(2)}, VariableSet({"q"}), 3), "non-semisimple classical limit",
                       AlgebraError);
}

TEST_CASE("tqft values") {
  const RF d0 = RF::variable(0), d1 = RF::variable(1);
  std::vector<RF> deltas{d0, d1};
  auto v = tqft_value(0, {0, 0, 0}, deltas);
  CHECK(v * v == SqrtExt(d0));
  CHECK(v.coordinates().size() == 2);
  CHECK(v.coordinates()[0].is_zero());
  auto w = tqft_value(1, {1}, deltas);
  CHECK(w * w == SqrtExt(d1));
  CHECK(tqft_value(0, {0, 0, 1}, deltas).is_zero());
  CHECK(tqft_value(0, {1, 1, 1, 1}, deltas) == SqrtExt(d1));
  CHECK(tqft_value(2, {}, deltas) == SqrtExt(d0 + d1));
}

TEST_CASE("model spec json") {
  auto s = model_spec_from_json(cohft::algebra::Json::parse(R"({"side":"A","m":1,"t":[-4],"lambda":null,"qOrder":2})"));
  REQUIRE(s.roots);
  CHECK(s.roots->size() == 2);
  CHECK((*s.roots)[0] + (*s.roots)[1] == 0);
  CHECK((*s.roots)[0] * (*s.roots)[1] == -4);
  CHECK_THROWS_AS(model_spec_from_json(cohft::algebra::Json::parse(R"({"side":"A","m":1,"t":[1]})")), AlgebraError);
  CHECK_THROWS_AS(model_spec_from_json(cohft::algebra::Json::parse(R"({"side":"B","m":1})")), AlgebraError);
}
