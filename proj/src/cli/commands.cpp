#include "cohft/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cohft/comparison/comparison.hpp"
#include "cohft/oscillating/saddle.hpp"
#include "cohft/strata/strata.hpp"

namespace cohft::cli {

using algebra::AlgebraError;
using algebra::make_rational;
using algebra::Matrix;
using algebra::VariableSet;
using comparison::CheckReport;
using frobenius::QSeries;
using frobenius::RF;

namespace {

Json rf_json(const RF& f, const VariableSet& vars) { return algebra::to_json(f, vars); }

Json qseries_json(const QSeries& s, const VariableSet& vars) {
  return algebra::series_to_json(s, "q", [&](const RF& c) { return rf_json(c, vars); });
}

Json flat_json(const comparison::FlatSeries& r) {
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < r.size(); ++n) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < r[n].rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < r[n].cols(); ++k) row.push_back(algebra::to_json(r[n](i, k), "t"));
      rows.push_back(std::move(row));
    }
    coeffs.push_back({{"z", n}, {"flat", std::move(rows)}});
  }
  return coeffs;
}

std::size_t series_length(std::size_t max_power) { return max_power + 1; }

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

frobenius::ModelSpec model_spec(const JobConfig& c) {
  Json j;
  j["side"] = std::string(1, c.side);
  j["m"] = c.m;
  j["qOrder"] = series_length(c.q_order);
  auto list = [](const std::vector<BigRational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  if (c.roots) j["roots"] = list(*c.roots);
  if (c.t_values) j["t"] = list(*c.t_values);
  if (c.lambdas) j["lambda"] = list(*c.lambdas);
  try {
    return frobenius::model_spec_from_json(j);
  } catch (const AlgebraError& e) {
    throw UsageError(e.what());
  }
}

void validate_common(const JobConfig& c) {
  require(c.m >= 1, "m must be positive");
  require(c.side == 'A' || c.side == 'P', "side must be A or P");
  require(c.t_order >= 1, "tOrder must be at least 1");
  require(c.format == "json" || c.format == "text", "format must be json or text");
  if (c.lam_order) require(*c.lam_order >= c.z_order, "lamOrder must be at least zOrder");
  if (c.side == 'A') require(!c.lambdas, "lambda specialization needs side P");
  if (c.side == 'P') require(!c.roots && !c.t_values, "roots/t specialization needs side A");
  require(!(c.roots && c.t_values), "give either roots or t, not both");
}

bool specialized(const JobConfig& c) { return c.roots || c.t_values || c.lambdas; }

frobenius::PmModel pm_model(const JobConfig& c, const frobenius::ModelSpec& spec) {
  if (!spec.lambdas) return frobenius::make_pm_model(c.m, spec.q_order);
  std::vector<RF> l;
  for (const auto& x : *spec.lambdas) l.emplace_back(x);
  try {
    return frobenius::make_pm_model(c.m, l, VariableSet({"q"}), spec.q_order);
  } catch (const AlgebraError& e) {
    throw UsageError(e.what());
  }
}

Json effective_orders(const JobConfig& c) {
  Json j;
  j["maxZPower"] = c.z_order;
  j["maxQPower"] = c.q_order;
  j["tBelow"] = c.t_order;
  j["lamOrder"] = c.lam_order.value_or(c.z_order);
  return j;
}

// ---------------------------------------------------------------- checks

std::string cell(std::size_t n, std::size_t i, std::size_t k) {
  return "z^" + std::to_string(n) + " (" + std::to_string(i) + "," + std::to_string(k) + ")";
}

void check_grid_zero(CheckReport& rep, const algebra::SeriesMatrix<RF>& res, const std::string& what,
                     std::size_t shift = 0) {
  for (std::size_t n = 0; n < res.order(); ++n)
    for (std::size_t i = 0; i < res.dim(); ++i)
      for (std::size_t k = 0; k < res.dim(); ++k)
        if (!(res[n](i, k) == RF(0))) {
          rep.fail(what + " " + cell(n + shift, i, k));
          return;
        }
}

void check_grid_zero(CheckReport& rep, const std::vector<qde::Grid<QSeries>>& res, const std::string& what,
                     std::size_t shift = 0) {
  for (std::size_t n = 0; n < res.size(); ++n)
    for (std::size_t i = 0; i < res[n].size(); ++i)
      for (std::size_t k = 0; k < res[n][i].size(); ++k)
        if (!res[n][i][k].is_zero()) {
          rep.fail(what + " " + cell(n + shift, i, k));
          return;
        }
}

CheckReport start(const std::string& name, const JobConfig& c) {
  CheckReport rep;
  rep.check = name;
  rep.pass = true;
  rep.params = {{"m", c.m}};
  return rep;
}

std::vector<std::vector<BigRational>> random_points(int m, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<std::vector<BigRational>> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<BigRational> q;
    BigRational sum = 0;
    for (int i = 0; i < m; ++i) {
      long d = den(rng);
      q.push_back(make_rational(num(rng), d));
      sum += q.back();
    }
    q.push_back(-sum);
    std::set<BigRational> distinct(q.begin(), q.end());
    if (distinct.size() == q.size()) out.push_back(q);
  }
  return out;
}

Json rationals_json(const std::vector<BigRational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

CheckReport check_fz(const JobConfig& c) {
  require(c.m == 1, "fz needs m = 1");
  require(!specialized(c), "fz runs at symbolic t");
  CheckReport rep = start("fz", c);
  std::size_t len = series_length(c.z_order);
  auto model = frobenius::make_am_model(1);
  auto fz = oscillating::fz_series(len);
  auto compare = [&](const qde::RMatrixA& r, const std::string& tag) {
    for (std::size_t n = 0; n < len; ++n)
      for (std::size_t k = 0; k < 2; ++k) {
        RF wn = (RF(make_rational(-1, 72)) * model.deltas[k].pow(-3)).pow(static_cast<long>(n));
        if (!(r.diagonal(k, n) == RF((fz.a[n] + fz.b[n]) / 2) * wn)) rep.fail(tag + " diagonal " + cell(n, k, k));
        if (!(r.hat[n](1 - k, k) == model.roots[k] * RF(fz.b[n] - fz.a[n]) * wn))
          rep.fail(tag + " off-diagonal " + cell(n, 1 - k, k));
      }
  };
  compare(qde::solve_r_a(model, len), "qde");
  compare(oscillating::rmatrix_from_saddles_a(model, len), "saddle");
  rep.details["coefficients"] = static_cast<long>(len);
  return rep;
}

CheckReport check_saddle(const JobConfig& c) {
  require(c.side == 'A', "saddle compares A-side constructions");
  CheckReport rep = start("saddle", c);
  std::size_t len = series_length(c.z_order);
  auto spec = model_spec(c);
  auto symbolic = frobenius::make_am_model(c.m);
  auto a = qde::solve_r_a(symbolic, len);
  std::vector<std::vector<BigRational>> pts;
  if (spec.roots) {
    pts.push_back(*spec.roots);
  } else {
    auto b = oscillating::rmatrix_from_saddles_a(symbolic, len);
    for (std::size_t n = 0; n < len; ++n)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
          if (!(a.hat[n](i, k) == b.hat[n](i, k))) rep.fail("symbolic " + cell(n, i, k));
    pts = random_points(c.m, c.seed, c.points);
    rep.params["seed"] = c.seed;
  }
  Json used = Json::array();
  for (const auto& pt : pts) {
    used.push_back(rationals_json(pt));
    auto b = oscillating::rmatrix_from_saddles_a(frobenius::make_am_model_at(pt), len);
    std::vector<BigRational> free(pt.begin(), pt.end() - 1);
    for (std::size_t n = 0; n < len; ++n)
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
          if (!(RF(a.hat[n](i, k).evaluate(free)) == b.hat[n](i, k))) rep.fail("point " + cell(n, i, k));
  }
  rep.details["points"] = std::move(used);
  return rep;
}

CheckReport check_symplectic(const JobConfig& c) {
  CheckReport rep = start("symplectic", c);
  rep.params["side"] = std::string(1, c.side);
  std::size_t len = series_length(c.z_order);
  auto spec = model_spec(c);
  Json checked = Json::array();
  if (c.side == 'A') {
    if (spec.roots) {
      auto r = oscillating::rmatrix_from_saddles_a(frobenius::make_am_model_at(*spec.roots), len);
      if (c.inject_fault && len > 1) r.hat[1](0, 1) += RF(1);
      check_grid_zero(rep, qde::verify_symplectic(r), "symplectic");
      checked.push_back("symplectic");
    } else {
      auto r = qde::solve_r_a(frobenius::make_am_model(c.m), len);
      if (c.inject_fault && len > 1) r.hat[1](0, 1) += RF(1);
      check_grid_zero(rep, qde::qde_residual(r), "qde", 1);
      check_grid_zero(rep, qde::verify_symplectic(r), "symplectic");
      check_grid_zero(rep, qde::verify_homogeneity(r), "homogeneity");
      checked = {"qde", "symplectic", "homogeneity"};
    }
  } else {
    auto r = qde::solve_r_pm(pm_model(c, spec), len);
    if (c.inject_fault && len > 1) r.hat[1][0][1] += QSeries::constant(RF(1), r.q_order);
    check_grid_zero(rep, qde::qde_residual(r), "qde", 1);
    check_grid_zero(rep, qde::verify_symplectic(r), "symplectic");
    checked = {"qde", "symplectic"};
    if (!spec.lambdas) {
      check_grid_zero(rep, qde::verify_homogeneity(r), "homogeneity");
      checked.push_back("homogeneity");
    }
  }
  rep.details["residuals"] = std::move(checked);
  return rep;
}

CheckReport check_bernoulli(const JobConfig& c) {
  CheckReport rep = start("bernoulli", c);
  std::size_t len = series_length(c.z_order);
  auto spec = model_spec(c);
  auto model = pm_model(c, spec);
  auto r = qde::solve_r_pm(model, len);
  auto lim = oscillating::bernoulli_diagonal(model.lambdas, len);
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t i = 0; i < r.dim(); ++i)
      for (std::size_t k = 0; k < r.dim(); ++k) {
        RF got = r.hat[n][i][k][0] / r.deltas[i][0];
        RF want = i == k ? lim[i][n] : RF(0);
        if (!(got == want)) rep.fail(cell(n, i, k));
      }
  return rep;
}

CheckReport check_thm1(const JobConfig& c) {
  require(!specialized(c), "thm1 runs at symbolic parameters");
  auto rep = comparison::thm1_check(c.m, series_length(c.z_order), series_length(c.q_order));
  rep.params = {{"m", c.m}};
  return rep;
}

CheckReport check_thm2(const JobConfig& c) {
  require(!specialized(c), "thm2 runs at the Airy point");
  auto res = comparison::intermediate_r(c.m, series_length(c.z_order), c.t_order);
  CheckReport rep = res.report;
  rep.params = {{"m", c.m}};
  std::size_t phi_order = static_cast<std::size_t>(std::max<long>(c.t_order, 8)) + 1;
  auto residual = comparison::phi_ode_residual(comparison::phi_series(c.m, phi_order));
  bool phi_ok = std::all_of(residual.begin(), residual.end(), [](const BigRational& x) { return x == 0; });
  rep.details["phiResidualZero"] = phi_ok;
  rep.details["phiResidualTerms"] = residual.size();
  if (!phi_ok) rep.fail("phi ODE residual");
  return rep;
}

CheckReport check_obstruction(const JobConfig& c) {
  require(c.m == 2, "obstruction needs m = 2");
  return comparison::obstruction_m2();
}

CheckReport check_notpol(const JobConfig& c) {
  auto rep = comparison::notpol_check(c.m, series_length(c.z_order));
  rep.params = {{"m", c.m}};
  return rep;
}

using CheckFn = std::function<CheckReport(const JobConfig&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"bernoulli", check_bernoulli}, {"fz", check_fz},         {"notpol", check_notpol},
      {"obstruction", check_obstruction}, {"saddle", check_saddle}, {"symplectic", check_symplectic},
      {"thm1", check_thm1},           {"thm2", check_thm2}};
  return r;
}

bool applicable(const std::string& name, const JobConfig& c) {
  if (name == "fz") return c.m == 1 && !specialized(c);
  if (name == "obstruction") return c.m == 2;
  if (name == "thm1" || name == "thm2") return !specialized(c);
  if (name == "saddle") return c.side == 'A';
  if (name == "bernoulli") return c.side == 'P' || !specialized(c);
  return true;
}

JobConfig bernoulli_config(JobConfig c) {
  if (c.side == 'A') c.side = 'P';
  return c;
}

// ---------------------------------------------------------------- text

std::string rf_text(const Json& j) { return j.at("text").get<std::string>(); }

std::string qseries_text(const Json& j) {
  std::string s;
  const auto& coeffs = j.at("coeffs");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::string t = rf_text(coeffs[i]);
    if (t == "0") continue;
    if (!s.empty()) s += " + ";
    s += "(" + t + ")";
    if (i > 0) s += "*q^" + std::to_string(i);
  }
  return (s.empty() ? "0" : s) + " + O(q^" + j.at("order").dump() + ")";
}

std::string laurent_text(const Json& j) {
  std::string s;
  for (const auto& t : j.at("terms")) {
    if (!s.empty()) s += " + ";
    std::string q = t.at("c").at("n").get<std::string>();
    if (t.at("c").at("d") != "1") q += "/" + t.at("c").at("d").get<std::string>();
    s += "(" + q + ")*t^" + t.at("exp").dump();
  }
  if (s.empty()) s = "0";
  if (j.at("precision") != "exact") s += " + O(t^" + j.at("precision").dump() + ")";
  return s;
}

std::string render_rmatrix(const Json& p) {
  std::ostringstream out;
  out << "side " << p.at("side").get<std::string>() << " m=" << p.at("m") << " form "
      << p.at("form").get<std::string>() << "\n";
  for (const auto& co : p.at("coefficients")) {
    std::size_t n = co.at("z").get<std::size_t>();
    const bool flat = co.contains("flat");
    const auto& grid = flat ? co.at("flat") : co.at("hat");
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t k = 0; k < grid[i].size(); ++k) {
        const auto& e = grid[i][k];
        std::string t = flat ? laurent_text(e) : e.contains("coeffs") ? qseries_text(e) : rf_text(e);
        out << cell(n, i, k) << ": " << t << "\n";
      }
    if (co.contains("diagonal")) {
      const auto& d = co.at("diagonal");
      for (std::size_t i = 0; i < d.size(); ++i)
        out << "R " << cell(n, i, i) << ": " << (d[i].contains("coeffs") ? qseries_text(d[i]) : rf_text(d[i])) << "\n";
    }
  }
  return out.str();
}

std::string render_verify(const Json& p) {
  std::ostringstream out;
  for (const auto& r : p.at("reports")) {
    out << (r.at("pass").get<bool>() ? "PASS " : "FAIL ") << r.at("check").get<std::string>();
    if (r.contains("firstFailureCell")) out << " at " << r.at("firstFailureCell").get<std::string>();
    out << "\n";
  }
  out << (p.at("pass").get<bool>() ? "all checks passed" : "verification failed") << "\n";
  return out.str();
}

std::string render_relations(const Json& p) {
  std::ostringstream out;
  out << "g=" << p.at("g") << " n=" << p.at("n") << " theory " << p.at("theory").get<std::string>()
      << " relations: " << p.at("relationCount") << "\n";
  out << p.at("relations").dump() << "\n";
  return out.str();
}

std::string render_graphs(const Json& p) {
  std::ostringstream out;
  out << "g=" << p.at("g") << " n=" << p.at("n") << " graphs: " << p.at("count") << "\n";
  for (const auto& gr : p.at("graphs"))
    out << "genus " << gr.at("genus").dump() << " legs " << gr.at("legs").dump() << " edges "
        << gr.at("edges").dump() << " aut " << gr.at("automorphisms") << "\n";
  return out.str();
}

}  // namespace

std::vector<BigRational> parse_rational_list(const std::string& text) {
  std::vector<BigRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    try {
      out.push_back(algebra::parse_rational(item));
    } catch (const std::exception&) {
      throw UsageError("not an exact rational: '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("empty rational list");
  return out;
}

Json rmatrix_to_json(const qde::RMatrixA& r) {
  Json j;
  j["side"] = "A";
  j["m"] = r.m;
  j["form"] = "hat";
  j["vars"] = r.vars.names();
  j["maxZPower"] = r.order() == 0 ? 0 : r.order() - 1;
  Json roots = Json::array(), deltas = Json::array();
  for (const auto& x : r.roots) roots.push_back(rf_json(x, r.vars));
  for (const auto& x : r.deltas) deltas.push_back(rf_json(x, r.vars));
  j["roots"] = std::move(roots);
  j["deltas"] = std::move(deltas);
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < r.order(); ++n) {
    Json rows = Json::array(), diag = Json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < r.dim(); ++k) row.push_back(rf_json(r.hat[n](i, k), r.vars));
      rows.push_back(std::move(row));
      diag.push_back(rf_json(r.diagonal(i, n), r.vars));
    }
    coeffs.push_back({{"z", n}, {"hat", std::move(rows)}, {"diagonal", std::move(diag)}});
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json rmatrix_to_json(const qde::RMatrixP& r) {
  Json j;
  j["side"] = "P";
  j["m"] = r.m;
  j["form"] = "hat";
  j["vars"] = r.vars.names();
  j["maxZPower"] = r.order() == 0 ? 0 : r.order() - 1;
  j["maxQPower"] = r.q_order == 0 ? 0 : r.q_order - 1;
  Json roots = Json::array(), deltas = Json::array();
  for (const auto& x : r.roots) roots.push_back(qseries_json(x, r.vars));
  for (const auto& x : r.deltas) deltas.push_back(qseries_json(x, r.vars));
  j["roots"] = std::move(roots);
  j["deltas"] = std::move(deltas);
  Json coeffs = Json::array();
  for (std::size_t n = 0; n < r.order(); ++n) {
    Json rows = Json::array(), diag = Json::array();
    for (std::size_t i = 0; i < r.dim(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < r.dim(); ++k) row.push_back(qseries_json(r.hat[n][i][k], r.vars));
      rows.push_back(std::move(row));
      diag.push_back(qseries_json(r.hat[n][i][i] * r.deltas[i].inverse(), r.vars));
    }
    coeffs.push_back({{"z", n}, {"hat", std::move(rows)}, {"diagonal", std::move(diag)}});
  }
  j["coefficients"] = std::move(coeffs);
  return j;
}

CommandResult cmd_rmatrix(const JobConfig& c) {
  validate_common(c);
  std::size_t len = series_length(c.z_order);
  CommandResult out;
  if (c.airy) {
    require(!specialized(c), "--airy fixes the point");
    require(c.method.empty(), "--method does not apply with --airy");
    comparison::FlatSeries flat;
    if (c.side == 'A') {
      flat = comparison::airy_flat_r_a(c.m, len);
    } else {
      flat = comparison::flat_at_airy(qde::solve_r_pm_in_a(frobenius::make_am_model(c.m, {"lam"}), len));
    }
    out.payload = {{"side", std::string(1, c.side)}, {"m", c.m}, {"form", "flat"}, {"airy", true},
                   {"lam", 1},  {"maxZPower", c.z_order}, {"coefficients", flat_json(flat)}};
    return out;
  }
  auto spec = model_spec(c);
  if (c.side == 'P') {
    require(c.method.empty() || c.method == "qde", "side P uses the qde method");
    out.payload = rmatrix_to_json(qde::solve_r_pm(pm_model(c, spec), len));
    return out;
  }
  std::string method = c.method.empty() ? (spec.roots ? "saddle" : "qde") : c.method;
  require(method == "qde" || method == "saddle", "method must be qde or saddle");
  if (spec.roots) {
    require(method == "saddle", "the qde method needs symbolic t; use --method saddle");
    out.payload = rmatrix_to_json(oscillating::rmatrix_from_saddles_a(frobenius::make_am_model_at(*spec.roots), len));
  } else {
    auto model = frobenius::make_am_model(c.m);
    out.payload = rmatrix_to_json(method == "qde" ? qde::solve_r_a(model, len)
                                                  : oscillating::rmatrix_from_saddles_a(model, len));
  }
  out.payload["method"] = method;
  return out;
}

CommandResult cmd_verify(const JobConfig& c) {
  validate_common(c);
  std::vector<std::string> names;
  const auto& reg = registry();
  bool all = c.checks.empty() || std::find(c.checks.begin(), c.checks.end(), "all") != c.checks.end();
  if (all) {
    for (const auto& [name, fn] : reg)
      if (applicable(name, c)) names.push_back(name);
  } else {
    for (const auto& name : c.checks) {
      bool known = std::any_of(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; });
      require(known, "unknown check '" + name + "'");
      names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
  }
  Json reports = Json::array();
  bool pass = true;
  for (const auto& name : names) {
    auto fn = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == name; })->second;
    JobConfig cc = name == "bernoulli" ? bernoulli_config(c) : c;
    auto t0 = std::chrono::steady_clock::now();
    CheckReport rep = fn(cc);
    if (!rep.pass && !rep.first_failure) rep.first_failure = "unspecified";
    Json j = rep.to_json();
    j["effectiveOrders"] = effective_orders(c);
    if (c.timing)
      j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pass = pass && rep.pass;
    reports.push_back(std::move(j));
  }
  CommandResult out;
  out.exit_code = pass ? kPass : kFail;
  out.payload = {{"command", "verify"}, {"pass", pass}, {"reports", std::move(reports)}};
  return out;
}

CommandResult cmd_relations(const JobConfig& c) {
  require(c.theory == "3spin" || c.theory == "identity", "theory must be 3spin or identity");
  std::vector<int> a = c.a;
  if (a.empty() && c.n) a.assign(static_cast<std::size_t>(std::max(*c.n, 0)), 1);
  require(!c.n || *c.n >= 0, "n must be non-negative");
  require(!c.n || static_cast<std::size_t>(*c.n) == a.size(), "n disagrees with the insertion list");
  const int n = static_cast<int>(a.size());
  require(c.g >= 0, "g must be non-negative");
  require(2 * c.g - 2 + n > 0, "unstable (g, n)");
  for (int x : a) require(x == 0 || x == 1, "3-spin insertions are 0 or 1");
  require(c.codim >= 0, "codim must be non-negative");
  require(c.codim <= 3 * c.g - 3 + n, "codim exceeds dim M_{g,n}");
  require(c.codim <= 3, "codim above desk scale");
  require(c.format == "json" || c.format == "text", "format must be json or text");

  auto res = strata::three_spin_relations(c.g, a, c.codim, c.theory == "identity");
  VariableSet vars({"t1"});
  Json j;
  j["command"] = "relations";
  j["theory"] = c.theory;
  j["g"] = c.g;
  j["n"] = n;
  j["a"] = a;
  j["codim"] = c.codim;
  j["disc"] = algebra::to_json(res.disc, vars);
  j["element"] = res.element.to_json(vars);
  j["relations"] = res.relations.to_json(vars);
  j["relationCount"] = res.relations.polar.size();
  if (c.theory == "3spin") {
    BigRational d = strata::spin_degree(3, c.g, a);
    auto vanishing = strata::degree_vanishing_part(res.element, d);
    strata::StrataElement positive;
    positive.g = c.g;
    positive.n = n;
    for (int k = 1; k <= c.codim; ++k) positive += vanishing.codimension_part(k);
    j["degree"] = d.get_str();
    j["degreeVanishing"] = positive.to_json(vars);
  }
  CommandResult out;
  out.payload = std::move(j);
  return out;
}

CommandResult cmd_graphs(const JobConfig& c) {
  require(c.n.has_value(), "graphs needs --n");
  require(c.g >= 0 && *c.n >= 0, "g and n must be non-negative");
  require(2 * c.g - 2 + *c.n > 0, "unstable (g, n)");
  require(c.g + *c.n <= 6, "g + n above desk scale");
  auto graphs = strata::enumerate_stable_graphs(c.g, *c.n);
  Json list = Json::array();
  for (const auto& gr : graphs) {
    Json edges = Json::array();
    for (const auto& [u, v] : gr.edges) edges.push_back({u, v});
    list.push_back({{"genus", gr.genus}, {"legs", gr.leg_vertex}, {"edges", edges},
                    {"automorphisms", gr.automorphisms}});
  }
  CommandResult out;
  out.payload = {{"command", "graphs"}, {"g", c.g}, {"n", *c.n}, {"count", graphs.size()}, {"graphs", list}};
  return out;
}

CommandResult run(const JobConfig& c) {
  try {
    if (c.command == "rmatrix") return cmd_rmatrix(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "relations") return cmd_relations(c);
    if (c.command == "graphs") return cmd_graphs(c);
    throw UsageError("unknown command '" + c.command + "'");
  } catch (const UsageError& e) {
    return {kUsage, {{"error", e.what()}}};
  } catch (const AlgebraError& e) {
    return {kUsage, {{"error", e.what()}}};
  }
}

std::string render(const JobConfig& c, const CommandResult& r) {
  if (c.format != "text") return r.payload.dump(2) + "\n";
  if (r.payload.contains("error")) return "error: " + r.payload.at("error").get<std::string>() + "\n";
  if (c.command == "verify") return render_verify(r.payload);
  if (c.command == "rmatrix") return render_rmatrix(r.payload);
  if (c.command == "relations") return render_relations(r.payload);
  if (c.command == "graphs") return render_graphs(r.payload);
  return r.payload.dump(2) + "\n";
}

}  // namespace cohft::cli
