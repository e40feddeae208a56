#include <map>

#include "cohft/algebra/gap_fraction.hpp"
#include "cohft/comparison/comparison.hpp"

namespace cohft::comparison {

using algebra::GapFraction;
using algebra::Polynomial;
using algebra::TruncatedSeries;
using GQ = TruncatedSeries<GapFraction>;

namespace {

std::string cell(std::size_t n, std::size_t i, std::size_t k) {
  return "z^" + std::to_string(n) + " (" + std::to_string(i) + "," + std::to_string(k) + ")";
}

GQ eval_poly(const Polynomial& p, const std::vector<GQ>& values, const GQ& zero, const GQ& one) {
  std::vector<std::vector<GQ>> powers(values.size(), std::vector<GQ>{one});
  GQ acc = zero;
  for (const auto& term : p.terms()) {
    GQ mono = one.scaled(GapFraction(term.coefficient));
    for (std::size_t v = 0; v < values.size(); ++v) {
      unsigned e = term.exponents[v];
      while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * values[v]);
      if (e > 0) mono = mono * powers[v][e];
    }
    acc += mono;
  }
  return acc;
}

}  // namespace

Json CheckReport::to_json() const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["pass"] = pass;
  if (first_failure) j["firstFailureCell"] = *first_failure;
  if (!details.empty()) j["details"] = details;
  return j;
}

CheckReport thm1_check(int m, std::size_t z_order, std::size_t q_order) {
  CheckReport rep;
  rep.check = "thm1";
  rep.params = {{"m", m}, {"zOrder", z_order}, {"qOrder", q_order}};
  rep.pass = true;
  auto amodel = frobenius::make_am_model(m, {"lam"});
  auto rp = qde::solve_r_pm_in_a(amodel, z_order);
  auto ra = qde::solve_r_a(frobenius::make_am_model(m), z_order);
  std::size_t lam = static_cast<std::size_t>(m), dim = rp.dim();

  // (a) no positive lambda-power after z -> z/lambda, (b) lambda^0 part = A-side
  std::size_t unscaled_positive = 0;
  bool no_positive = true, limit_matches = true;
  for (std::size_t n = 0; n < z_order; ++n)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const RF& f = rp.hat[n](i, k);
        if (f.denominator().uses_variable(lam) || f.numerator().degree(lam) > n) {
          no_positive = false;
          rep.fail("positive lambda-power at " + cell(n, i, k));
          continue;
        }
        if (f.numerator().degree(lam) > 0) ++unscaled_positive;
        auto by_lam = f.numerator().coefficients_in(lam);
        Polynomial top = by_lam.size() > n ? by_lam[n] : Polynomial();
        if (RF(top, f.denominator()) != ra.hat[n](i, k)) {
          limit_matches = false;
          rep.fail("lambda^0 part differs at " + cell(n, i, k));
        }
      }

  // agreement with the q-series solution after the matchup
  auto pm = frobenius::make_pm_model(m, q_order);
  auto rq = qde::solve_r_pm(pm, z_order);
  auto basis = algebra::root_gap_basis(pm.lambdas);
  auto lift = [&](const frobenius::QSeries& s) {
    std::vector<GapFraction> c;
    for (std::size_t p = 0; p < q_order; ++p) c.emplace_back(basis, s[p]);
    return GQ(std::move(c), q_order);
  };
  GQ zero(q_order), one = GQ::constant(GapFraction(1), q_order);
  std::vector<GQ> values;
  for (int j = 0; j < m; ++j) values.push_back(lift(pm.Q[static_cast<std::size_t>(j)]));
  RF lambda = frobenius::matchup_phi(m, pm.lambdas, RF(0)).lambda;
  values.push_back(GQ::constant(GapFraction(basis, lambda), q_order));
  bool matches_pm = true;
  for (std::size_t n = 0; n < z_order; ++n)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        const RF& f = rp.hat[n](i, k);
        GQ v = eval_poly(f.numerator(), values, zero, one) * eval_poly(f.denominator(), values, zero, one).inverse();
        if (!(v == lift(rq.hat[n][i][k]))) {
          matches_pm = false;
          rep.fail("q-series mismatch at " + cell(n, i, k));
        }
      }
  rep.details = {{"noPositiveLambdaPowers", no_positive},
                 {"limitEqualsASide", limit_matches},
                 {"matchesQSeriesSolution", matches_pm},
                 {"unscaledCellsWithPositivePowers", unscaled_positive}};
  return rep;
}

}  // namespace cohft::comparison
