#include "doctest.h"

#include "cohft/cli/commands.hpp"
#include "cohft/oscillating/saddle.hpp"

using namespace cohft::cli;
using cohft::algebra::make_rational;
using cohft::frobenius::RF;

namespace {

JobConfig config(const std::string& command) {
  JobConfig c;
  c.command = command;
  return c;
}

}  // namespace

TEST_CASE("rmatrix A, m=1: diagonal carries the Faber-Zagier coefficients") {
  auto c = config("rmatrix");
  c.z_order = 3;
  auto r = run(c);
  REQUIRE(r.exit_code == kPass);
  auto model = cohft::frobenius::make_am_model(1);
  auto fz = cohft::oscillating::fz_series(4);
  const auto& coeffs = r.payload.at("coefficients");
  REQUIRE(coeffs.size() == 4);
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t k = 0; k < 2; ++k) {
      RF w = RF(make_rational(-1, 72)) * model.deltas[k].pow(-3);
      RF want = RF((fz.a[n] + fz.b[n]) / 2) * w.pow(static_cast<long>(n));
      CHECK(coeffs[n].at("diagonal")[k] == cohft::algebra::to_json(want, model.vars));
    }
  CHECK(r.payload.at("method") == "qde");
  c.method = "saddle";
  auto s = run(c);
  CHECK(s.payload.at("coefficients") == coeffs);
}

TEST_CASE("rmatrix P, qOrder 0: Bernoulli diagonal") {
  auto c = config("rmatrix");
  c.side = 'P';
  c.z_order = 2;
  c.q_order = 0;
  auto r = run(c);
  REQUIRE(r.exit_code == kPass);
  auto model = cohft::frobenius::make_pm_model(1, 1);
  auto lim = cohft::oscillating::bernoulli_diagonal(model.lambdas, 3);
  const auto& coeffs = r.payload.at("coefficients");
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t i = 0; i < 2; ++i) {
      const auto& d = coeffs[n].at("diagonal")[i];
      CHECK(d.at("order") == 1);
      CHECK(d.at("coeffs")[0] == cohft::algebra::to_json(lim[i][n], model.vars));
      CHECK(coeffs[n].at("hat")[i][1 - i].at("coeffs").empty());
    }
}

TEST_CASE("rmatrix zOrder 0 is the identity") {
  for (char side : {'A', 'P'}) {
    auto c = config("rmatrix");
    c.side = side;
    c.m = 2;
    c.z_order = 0;
    c.q_order = 0;
    auto r = run(c);
    REQUIRE(r.exit_code == kPass);
    const auto& coeffs = r.payload.at("coefficients");
    REQUIRE(coeffs.size() == 1);
    for (const auto& d : coeffs[0].at("diagonal")) {
      const auto& f = d.contains("coeffs") ? d.at("coeffs")[0] : d;
      CHECK(f.at("text") == "1");
    }
  }
}

TEST_CASE("rmatrix output is deterministic") {
  auto c = config("rmatrix");
  c.m = 2;
  c.z_order = 2;
  CHECK(render(c, run(c)) == render(c, run(c)));
  c.airy = true;
  auto a = run(c);
  REQUIRE(a.exit_code == kPass);
  CHECK(a.payload.at("form") == "flat");
  CHECK(render(c, a) == render(c, run(c)));
}

TEST_CASE("rmatrix at a specialization") {
  auto c = config("rmatrix");
  c.m = 2;
  c.z_order = 1;
  c.t_values = std::vector<cohft::algebra::BigRational>{6, make_rational(-7, 2)};  // f' = (X-1)(X-2)(X+3)
  auto r = run(c);
  REQUIRE(r.exit_code == kPass);
  CHECK(r.payload.at("method") == "saddle");
  c.method = "qde";
  CHECK(run(c).exit_code == kUsage);
  c.method.clear();
  c.t_values = std::vector<cohft::algebra::BigRational>{1, 1};
  CHECK(run(c).exit_code == kUsage);
}

TEST_CASE("verify examples pass") {
  auto c = config("verify");
  c.checks = {"thm1"};
  auto r = run(c);
  CHECK(r.exit_code == kPass);
  CHECK(r.payload.at("reports")[0].at("check") == "thm1");

  c.checks = {"thm2"};
  c.z_order = 2;
  CHECK(run(c).exit_code == kPass);

  c.m = 2;
  c.checks = {"obstruction", "notpol", "symplectic"};
  r = run(c);
  CHECK(r.exit_code == kPass);
  // sorted by check name
  CHECK(r.payload.at("reports")[0].at("check") == "notpol");
  CHECK(r.payload.at("reports")[2].at("check") == "symplectic");
}

TEST_CASE("verify all at m=1") {
  auto c = config("verify");
  c.z_order = 3;
  c.q_order = 2;
  auto r = run(c);
  CHECK(r.exit_code == kPass);
  std::vector<std::string> names;
  for (const auto& rep : r.payload.at("reports")) names.push_back(rep.at("check"));
  CHECK(names == std::vector<std::string>{"bernoulli", "fz", "notpol", "saddle", "symplectic", "thm1", "thm2"});
}

TEST_CASE("verify failure reports the first cell") {
  auto c = config("verify");
  c.checks = {"symplectic"};
  c.z_order = 2;
  c.inject_fault = true;
  auto r = run(c);
  CHECK(r.exit_code == kFail);
  CHECK(r.payload.at("reports")[0].at("firstFailureCell") == "qde z^1 (0,1)");
  c.side = 'P';
  c.q_order = 1;
  CHECK(run(c).exit_code == kFail);
}

TEST_CASE("saddle check with seeded points") {
  auto c = config("verify");
  c.checks = {"saddle"};
  c.m = 2;
  c.z_order = 2;
  c.seed = 11;
  auto a = run(c);
  CHECK(a.exit_code == kPass);
  const auto& pts = a.payload.at("reports")[0].at("details").at("points");
  CHECK(pts.size() == 3);
  CHECK(run(c).payload == a.payload);
  c.seed = 12;
  CHECK(run(c).payload.at("reports")[0].at("details").at("points") != pts);
}

TEST_CASE("verify usage errors") {
  auto c = config("verify");
  c.checks = {"obstruction"};
  CHECK(run(c).exit_code == kUsage);
  c.checks = {"nonsense"};
  CHECK(run(c).exit_code == kUsage);
  c.checks = {"symplectic"};
  c.lambdas = std::vector<cohft::algebra::BigRational>{0, 1};
  CHECK(run(c).exit_code == kUsage);  // lambda on side A
  c.side = 'P';
  c.lambdas = std::vector<cohft::algebra::BigRational>{1, 1};
  CHECK(run(c).exit_code == kUsage);  // not semisimple
  CHECK(run(config("frobnicate")).exit_code == kUsage);
}

TEST_CASE("relations examples") {
  auto c = config("relations");
  c.g = 1;
  c.n = 1;
  c.codim = 1;
  auto r = run(c);
  REQUIRE(r.exit_code == kPass);
  CHECK(r.payload.at("relationCount") == 3);
  CHECK(r.payload.at("relations").at("poleOrders").at("1").size() == 3);
  CHECK(render(c, r) == render(c, run(c)));

  c.theory = "identity";
  CHECK(run(c).payload.at("relationCount") == 0);

  c.theory = "3spin";
  c.g = 0;
  c.n = 3;
  c.codim = 0;
  r = run(c);
  CHECK(r.payload.at("relationCount") == 0);
  CHECK(r.payload.at("degreeVanishing").at("terms").empty());

  c.n = 2;
  CHECK(run(c).exit_code == kUsage);
  c.n = 1;
  c.a = {2};
  c.g = 1;
  CHECK(run(c).exit_code == kUsage);
}

TEST_CASE("graphs") {
  auto c = config("graphs");
  for (auto [g, n, count] : {std::tuple{0, 4, 4}, std::tuple{1, 1, 2}, std::tuple{2, 0, 7}}) {
    c.g = g;
    c.n = n;
    auto r = run(c);
    REQUIRE(r.exit_code == kPass);
    CHECK(r.payload.at("count") == count);
  }
  c.g = 0;
  c.n = 2;
  CHECK(run(c).exit_code == kUsage);
}

TEST_CASE("rational lists") {
  auto v = parse_rational_list("1, -2/3,5");
  CHECK(v == std::vector<cohft::algebra::BigRational>{1, make_rational(-2, 3), 5});
  CHECK_THROWS_AS(parse_rational_list("1,x"), UsageError);
  CHECK_THROWS_AS(parse_rational_list(""), UsageError);
}
