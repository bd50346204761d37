#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mhd/params.hpp"
#include "reconnect/recon_data.hpp"

namespace smhd {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One experiment description; every runner consumes this. Field-level
// validation throws ConfigError with the offending key named.
struct ExperimentConfig {
  // grid
  int dim = 2;
  int n = 64;
  double box_length = 2.0 * M_PI;

  // physics
  PhysicalParams params;

  // initial data
  std::string recipe = "orszag-tang";  // orszag-tang | taylor-green |
                                       // reconnection | zero | constant
  double amp_v = 0.5;
  double amp_b = 0.5;

  // time integration
  double t_final = 1.0;
  double dt = 0.0;  // 0: derived from the CFL bound at t = 0
  double cfl = 0.4;
  int sample_stride = 10;      // ledger/norm-series stride, in steps
  int checkpoint_stride = 0;   // snapshot stride, 0 disables

  // output
  std::string outdir = "out";
  std::uint64_t rng_seed = 12345;

  // sweep
  std::vector<double> lambdas = {10.0, 40.0, 160.0, 640.0};
  int workers = 0;  // 0: hardware concurrency

  // reconnection
  ReconnectionData recon;
  double recon_lambda = 50.0;  // bulk viscosity of the certificate run
  int portrait_seeds = 12;

  // besov-check
  int check_samples = 1000;
  int bernstein_samples = 500;

  void validate(const std::string& kind) const;
  // canonical key=value dump (fixed order) used for config hashing
  std::string dump(const std::string& kind) const;
};

}  // namespace smhd
