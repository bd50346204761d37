#pragma once

#include <map>

#include "harness/config.hpp"
#include "harness/ratefit.hpp"

namespace smhd {

// Exit codes shared by the library runners and the CLI:
//   0 success, 2 config error, 3 invariant breach, 4 numerical failure.
enum ExitCode : int { kOk = 0, kConfigError = 2, kInvariantBreach = 3, kNumericalFailure = 4 };

struct RunResult {
  int exit_code = kOk;
  std::string message;

  // simulate
  double final_time = 0.0;
  double max_div_b = 0.0;
  double mass_drift = 0.0;
  double energy_residual = 0.0;  // incompressible runs only

  // sweep
  std::vector<RateFit> fits;
  double measured_M = 0.0;
  double vscript = 0.0;
  std::map<std::string, std::vector<double>> member_channels;  // name -> per-lambda values

  // reconnect
  bool certificate = false;
  int hyperbolic_t0 = 0;
  int hyperbolic_t1 = 0;
  bool epsilon_warning = false;

  // besov-check
  std::map<std::string, double> check_values;
  bool checks_passed = true;
};

RunResult run_simulation(const ExperimentConfig& cfg, bool compressible);
RunResult run_sweep(const ExperimentConfig& cfg);
RunResult run_reconnection(const ExperimentConfig& cfg);
RunResult run_besov_checks(const ExperimentConfig& cfg);

}  // namespace smhd
