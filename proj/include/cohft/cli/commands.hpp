#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohft/algebra/serialize.hpp"
#include "cohft/qde/solver.hpp"

namespace cohft::cli {

using algebra::BigRational;
using algebra::Json;

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// zOrder / qOrder are the highest powers kept; tOrder bounds t-powers from above (exclusive).
struct JobConfig {
  std::string command;
  std::vector<std::string> checks;  // verify: names or "all"
  int m = 1;
  char side = 'A';
  std::size_t z_order = 4;
  std::size_t q_order = 4;
  long t_order = 6;
  std::optional<std::size_t> lam_order;
  bool airy = false;
  std::string method;  // rmatrix, side A: qde | saddle
  std::optional<std::vector<BigRational>> roots;
  std::optional<std::vector<BigRational>> t_values;
  std::optional<std::vector<BigRational>> lambdas;
  std::uint64_t seed = 1;
  int points = 3;
  int g = 1;
  std::optional<int> n;
  int codim = 1;
  std::string theory = "3spin";
  std::vector<int> a;
  std::string format = "json";
  bool timing = false;
  bool inject_fault = false;  // perturb R before the symplectic check
};

struct CommandResult {
  int exit_code = kPass;
  Json payload;
};

/// Comma-separated exact rationals, e.g. "1,-2/3,5".
std::vector<BigRational> parse_rational_list(const std::string& text);

Json rmatrix_to_json(const qde::RMatrixA& r);
Json rmatrix_to_json(const qde::RMatrixP& r);

CommandResult cmd_rmatrix(const JobConfig& config);
CommandResult cmd_verify(const JobConfig& config);
CommandResult cmd_relations(const JobConfig& config);
CommandResult cmd_graphs(const JobConfig& config);

/// Dispatch on config.command; usage and domain errors become exit 2 with {"error": ...}.
CommandResult run(const JobConfig& config);

/// Rendering for --format.
std::string render(const JobConfig& config, const CommandResult& result);

}  // namespace cohft::cli
