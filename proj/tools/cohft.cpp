#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cohft/cli/commands.hpp"

using cohft::cli::JobConfig;

namespace {

void add_model_flags(CLI::App* sub, JobConfig& c, std::string& side, std::string& roots, std::string& t,
                     std::string& lambda) {
  sub->add_option("--m", c.m, "model dimension parameter");
  sub->add_option("--side", side, "A or P")->check(CLI::IsMember({"A", "P"}));
  sub->add_option("--zOrder", c.z_order, "highest z-power kept");
  sub->add_option("--qOrder", c.q_order, "highest q-power kept");
  sub->add_option("--tOrder", c.t_order, "t-powers checked below this bound");
  sub->add_option("--lamOrder", c.lam_order, "lambda-expansion depth");
  sub->add_option("--roots", roots, "critical points, comma-separated rationals");
  sub->add_option("--t", t, "t^1..t^m, comma-separated rationals");
  sub->add_option("--lambda", lambda, "equivariant parameters, comma-separated rationals");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohft: R-matrices, comparison checks and tautological relations"};
  app.require_subcommand(1);
  JobConfig c;
  std::string output, side = "A", roots, t, lambda;

  auto* rmatrix = app.add_subcommand("rmatrix", "compute an R-matrix");
  add_model_flags(rmatrix, c, side, roots, t, lambda);
  rmatrix->add_flag("--airy", c.airy, "flat basis at the Airy point, lambda = 1");
  rmatrix->add_option("--method", c.method, "qde or saddle (side A)");

  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_model_flags(verify, c, side, roots, t, lambda);
  verify->add_option("checks", c.checks,
                     "thm1 thm2 obstruction notpol symplectic bernoulli saddle fz, or all");
  verify->add_option("--seed", c.seed, "seed for random rational points");
  verify->add_option("--points", c.points, "number of random points");
  verify->add_flag("--timing", c.timing, "add wall-clock seconds to each report");
  verify->add_flag("--inject-fault", c.inject_fault, "perturb R before the symplectic check")->group("");

  auto* relations = app.add_subcommand("relations", "tautological relations from a CohFT");
  relations->add_option("--theory", c.theory, "3spin or identity");
  relations->add_flag("--r-matrix-identity", [&](std::int64_t) { c.theory = "identity"; }, "alias for --theory identity");
  relations->add_option("--g", c.g, "genus");
  relations->add_option("--n", c.n, "number of markings");
  relations->add_option("--a", c.a, "insertions X^{a_i}, default all 1");
  relations->add_option("--codim", c.codim, "maximal codimension");

  auto* graphs = app.add_subcommand("graphs", "list stable graphs");
  graphs->add_option("--g", c.g, "genus");
  graphs->add_option("--n", c.n, "number of markings");

  for (auto* sub : {rmatrix, verify, relations, graphs}) {
    sub->add_option("--output", output, "write to this path instead of stdout");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cohft::cli::kUsage;
  }

  cohft::cli::CommandResult result;
  try {
    c.command = app.get_subcommands().front()->get_name();
    c.side = side[0];
    if (!roots.empty()) c.roots = cohft::cli::parse_rational_list(roots);
    if (!t.empty()) c.t_values = cohft::cli::parse_rational_list(t);
    if (!lambda.empty()) c.lambdas = cohft::cli::parse_rational_list(lambda);
    result = cohft::cli::run(c);
  } catch (const cohft::cli::UsageError& e) {
    result = {cohft::cli::kUsage, {{"error", e.what()}}};
  }

  std::string text = cohft::cli::render(c, result);
  if (output.empty()) {
    (result.exit_code == cohft::cli::kUsage ? std::cerr : std::cout) << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      std::cerr << "error: cannot open " << output << "\n";
      return cohft::cli::kUsage;
    }
    f << text;
  }
  return result.exit_code;
}
