#include "doctest.h"

#include "cohft/frobenius/models.hpp"
#include "cohft/oscillating/saddle.hpp"
#include "cohft/strata/strata.hpp"

using namespace cohft::strata;
using cohft::algebra::make_rational;
using cohft::frobenius::make_am_model;

namespace {

RF rat(long a, long b = 1) { return RF(make_rational(a, b)); }

RSeries mumford(std::size_t order) {
  auto m = cohft::oscillating::mumford_r_entry(RF::variable(0), order);
  RSeries r;
  for (std::size_t n = 0; n < order; ++n) {
    Matrix<RF> x(1, 1);
    x(0, 0) = m[n];
    r.coeffs.push_back(x);
  }
  return r;
}

// R-matrix of A_{m+1} at rational critical points, in the idempotent basis
struct Point {
  RSeries r;
  std::shared_ptr<Tqft> tqft;
  std::vector<RF> roots;
};

Point at_point(int m, const std::vector<long>& q, std::size_t order) {
  auto model = make_am_model(m);
  RSeries r = idempotent_r(cohft::qde::solve_r_a(model, order));
  auto sub = [&](RF f) {
    for (std::size_t j = 0; j < q.size(); ++j) f = f.substitute(j, rat(q[j]));
    return f;
  };
  for (auto& c : r.coeffs)
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t k = 0; k < c.cols(); ++k) c(i, k) = sub(c(i, k));
  std::vector<RF> deltas, roots;
  for (const auto& d : model.deltas) deltas.push_back(sub(d));
  for (const auto& x : model.roots) roots.push_back(sub(x));
  return {r, std::make_shared<Tqft>(deltas), roots};
}

Stratum loop11() {
  Stratum s;
  s.genus = {0};
  s.kappa = {{}};
  s.legs = {{0, 0}};
  s.edges = {{0, 0, 0, 0}};
  return s;
}

}  // namespace

TEST_CASE("T vector") {
  auto one = std::vector<RF>{RF(1)};
  for (const auto& v : t_vector(identity_r(1, 4), one)) CHECK(v[0].is_zero());
  auto t = t_vector(mumford(4), one);
  CHECK(t[1][0].is_zero());
  CHECK(t[2][0] == RF::variable(0) * rat(1, 12));
  for (int m : {1, 2}) {
    auto model = make_am_model(m);
    auto r = idempotent_r(cohft::qde::solve_r_a(model, 4));
    auto tv = t_vector(r, std::vector<RF>(static_cast<std::size_t>(m) + 1, RF(1)));
    for (const auto& x : tv[1]) CHECK(x.is_zero());
  }
}

TEST_CASE("edge bivector") {
  auto eta = Matrix<RF>::identity(2);
  for (const auto& row : edge_bivector(identity_r(2, 4), eta))
    for (const auto& b : row) CHECK(b.is_zero());
  auto model = make_am_model(1);
  auto r = idempotent_r(cohft::qde::solve_r_a(model, 6));
  auto eta_inv = Matrix<RF>::diagonal(model.deltas);
  auto b = edge_bivector(r, eta_inv);
  CHECK_FALSE(b[0][0].is_zero());
  auto model2 = make_am_model(2);
  CHECK_NOTHROW(edge_bivector(idempotent_r(cohft::qde::solve_r_a(model2, 4)), Matrix<RF>::diagonal(model2.deltas)));
  r.coeffs[2](0, 1) += RF(1);
  CHECK_THROWS_WITH(edge_bivector(r, eta_inv), "symplectic condition violated");
}

TEST_CASE("identity R gives the TQFT") {
  auto model = make_am_model(1);
  auto tqft = std::make_shared<Tqft>(model.deltas);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 0}}) {
    std::vector<std::vector<RF>> ins(static_cast<std::size_t>(n), {model.roots[0], RF(1)});
    auto acted = rmatrix_action(tqft, identity_r(2, 3), g, ins, 2);
    CHECK(acted == evaluate(*tqft, g, ins, 2));
  }
}

TEST_CASE("Hodge R on the one-dimensional TQFT at (1,1)") {
  auto tqft = std::make_shared<Tqft>(std::vector<RF>{RF(1)});
  auto el = rmatrix_action(tqft, mumford(3), 1, {{RF(1)}}, 1);
  RF t = RF::variable(0);
  Stratum psi = Stratum::smooth(1, 1), kappa = Stratum::smooth(1, 1);
  psi.legs[0].second = 1;
  kappa.kappa[0] = {1};
  StrataElement expect{1, 1, {}};
  expect.add(Stratum::smooth(1, 1), RF(1));
  expect.add(psi, -t * rat(1, 12));
  expect.add(kappa, t * rat(1, 12));
  auto b = edge_bivector(mumford(3), Matrix<RF>::identity(1));
  expect.add(loop11(), rat(1, 2) * b[0][0](0, 0));
  CHECK(b[0][0](0, 0) == t * rat(1, 12));
  CHECK(el == expect);
}

TEST_CASE("degree-0 part is the TQFT") {
  for (int m : {1, 2}) {
    auto model = make_am_model(m);
    auto r = idempotent_r(cohft::qde::solve_r_a(model, 3));
    auto tqft = std::make_shared<Tqft>(model.deltas);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {0, 4}}) {
      std::vector<std::vector<RF>> ins;
      for (int i = 0; i < n; ++i) {
        std::vector<RF> v;
        for (const auto& q : model.roots) v.push_back(q.pow(i % (m + 1)));
        ins.push_back(v);
      }
      auto el = rmatrix_action(tqft, r, g, ins, 1);
      CHECK(el.codimension_part(0) == evaluate(*tqft, g, ins, 0));
    }
  }
}

TEST_CASE("S_n equivariance") {
  auto model = make_am_model(1);
  auto r = idempotent_r(cohft::qde::solve_r_a(model, 3));
  auto tqft = std::make_shared<Tqft>(model.deltas);
  auto x = [&](int a) { return std::vector<RF>{model.roots[0].pow(a), model.roots[1].pow(a)}; };
  std::vector<std::vector<RF>> ins{x(0), x(1), x(1), {RF(2), RF(5)}};
  std::vector<int> perm{2, 0, 3, 1};  // marking i -> perm[i]
  std::vector<std::vector<RF>> permuted(4);
  for (std::size_t i = 0; i < 4; ++i) permuted[static_cast<std::size_t>(perm[i])] = ins[i];
  auto a = rmatrix_action(tqft, r, 0, ins, 2);
  auto b = rmatrix_action(tqft, r, 0, permuted, 2);
  CHECK_FALSE(a.codimension_part(1).is_zero());
  CHECK(a.relabel_markings(perm) == b);

  auto c = rmatrix_action(tqft, r, 1, {x(1), {RF(3), RF(-1)}}, 2);
  auto d = rmatrix_action(tqft, r, 1, {{RF(3), RF(-1)}, x(1)}, 2);
  CHECK(c.relabel_markings({1, 0}) == d);
}

TEST_CASE("acting by R and then R^{-1} returns the TQFT") {
  for (auto [m, q] : std::vector<std::pair<int, std::vector<long>>>{{1, {1}}, {2, {1, 2}}}) {
    Point p = at_point(m, q, 4);
    std::size_t dim = static_cast<std::size_t>(m) + 1;
    auto acted = std::make_shared<ActedCohft>(p.r, p.tqft, false);
    ActedCohft back(series_inverse(p.r), acted, false);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}}) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      while (true) {
        CAPTURE(m);
        CAPTURE(g);
        auto v = back.value(g, idx, 2);
        CHECK(v == p.tqft->value(g, idx, 2));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == dim) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    }
    // the intermediate CohFT is not the TQFT
    CHECK_FALSE(acted->value(1, {0}, 2) == p.tqft->value(1, {0}, 2));
  }
}

TEST_CASE("relation extraction") {
  Polynomial t = Polynomial::variable(0);
  Polynomial disc = t * Polynomial(4);
  StrataElement el{1, 1, {}};
  Stratum psi = Stratum::smooth(1, 1);
  psi.legs[0].second = 1;
  el.add(Stratum::smooth(1, 1), RF(t) * rat(3));
  CHECK(extract_relations(el, disc).is_zero());
  el.add(psi, RF(1) / RF(disc));
  auto rv = extract_relations(el, disc);
  REQUIRE(rv.polar.size() == 1);
  CHECK(rv.at_order(1).at(psi) == Polynomial(1));
  el.add(loop11(), RF(1) / RF(t + Polynomial(1)));
  CHECK_THROWS_WITH(extract_relations(el, disc), "unexpected denominator");

  // (t^2 + t + 5) / disc^2 = 1/16 + (1/4) / disc + 5 / disc^2
  StrataElement e2{1, 1, {}};
  e2.add(psi, RF(t * t + t + Polynomial(5)) / RF(disc * disc));
  auto r2 = extract_relations(e2, disc);
  CHECK(r2.at_order(2).at(psi) == Polynomial(5));
  CHECK(r2.at_order(1).at(psi) == Polynomial(make_rational(1, 4)));
}

TEST_CASE("spin degrees") {
  CHECK(spin_degree(3, 4, {}) == 1);
  CHECK(spin_degree(3, 1, {1}) == make_rational(1, 3));
  CHECK(spin_degree(4, 2, {}) == make_rational(1, 2));
}

TEST_CASE("3-spin relation at (1,1) in codimension 1") {
  auto res = three_spin_relations(1, {1}, 1);
  REQUIRE_FALSE(res.relations.is_zero());
  CHECK(res.disc == Polynomial::variable(0) * Polynomial(4));
  // int psi_1 = int kappa_1 = 1/24 and int xi_* 1 = 1 on M_{1,1}
  Stratum psi = Stratum::smooth(1, 1), kappa = Stratum::smooth(1, 1);
  psi.legs[0].second = 1;
  kappa.kappa[0] = {1};
  for (int k : {1, 2, 3}) {
    auto vec = res.relations.at_order(k);
    BigRational integral = 0;
    for (const auto& [s, c] : vec) {
      REQUIRE(c.is_constant());
      Stratum cs = s.canonical();
      if (cs == psi.canonical() || cs == kappa.canonical()) integral += c.constant_value() * make_rational(1, 24);
      else if (cs == loop11().canonical()) integral += c.constant_value();
      else FAIL("unexpected stratum");
    }
    CHECK(integral == 0);
  }
  CHECK(res.relations.at_order(1).size() == 3);
  CHECK(degree_vanishing_part(res.element, spin_degree(3, 1, {1})) == res.element);
  auto whole = three_spin_relations(0, {1, 1, 1, 1}, 1).element;
  CHECK(degree_vanishing_part(whole, spin_degree(3, 0, {1, 1, 1, 1})).is_zero());

  CHECK(three_spin_relations(1, {1}, 1, true).relations.is_zero());
  CHECK(three_spin_relations(0, {1, 1, 1}, 0).relations.is_zero());

  auto a = three_spin_relations(1, {1, 0}, 1).element;
  auto b = three_spin_relations(1, {0, 1}, 1).element;
  CHECK(a.relabel_markings({1, 0}) == b);
}
