#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "oddwave/bifurcation.hpp"
#include "oddwave/evolution.hpp"
#include "oddwave/model.hpp"
#include "oddwave/params.hpp"

namespace oddwave::cli {

enum ExitCode : int {
  kSuccess = 0,
  kChecksFailed = 1,
  kConfigError = 2,
  kNumericalFailure = 3,
};

struct RunConfig {
  std::string command;
  ModelParams params{0.5, 1.0, 0.5};
  int fold = 1;
  int k_max = 10;
  ContinuationSettings continuation;
  EvolutionConfig evolution;
  bool dt_halving = false;
  std::vector<double> profile_at;
  int ensemble = 200;
  std::vector<int> degree_tiers{20, 40};
  double holder_alpha = 0.5;
  int holder_grid = 4096;
  std::string out = "oddwave_out";
  std::uint64_t seed = 1234;
  ResidualFault fault = ResidualFault::kNone;

  /// Re-checks every numeric constraint; throws ConfigError.
  void validate() const;
};

nlohmann::json to_json(const RunConfig& cfg);

/// Parses argv (argv[0] is the program name) and runs one subcommand.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// Invariant families reported by `verify`; `quick` shrinks ensembles and
/// grids for `selftest`.
std::vector<CheckResult> run_checks(const RunConfig& cfg, bool quick, nlohmann::json* sweep_doc,
                                    std::string* sweep_csv_text);

}  // namespace oddwave::cli
