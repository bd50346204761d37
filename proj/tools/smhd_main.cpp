// Command-line front end: simulate | sweep | reconnect | besov-check | report.
// Flags override config-file keys (command line wins); unknown keys in a
// config file are hard errors. Exit codes: 0 success, 2 config error,
// 3 invariant breach, 4 numerical failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "harness/runners.hpp"

using namespace smhd;

namespace {

void bind_common(CLI::App* cmd, ExperimentConfig& cfg) {
  cmd->add_option("--dim", cfg.dim, "spatial dimension (2 or 3)");
  cmd->add_option("--n", cfg.n, "grid points per dimension (power of two)");
  cmd->add_option("--box-length", cfg.box_length, "periodic box edge length");
  cmd->add_option("--mu", cfg.params.mu, "shear viscosity");
  cmd->add_option("--lambda", cfg.params.lambda, "bulk viscosity");
  cmd->add_option("--eta", cfg.params.eta, "magnetic diffusivity");
  cmd->add_option("--gamma", cfg.params.gamma, "adiabatic exponent");
  cmd->add_option("--pressure-amplitude", cfg.params.A,
                  "pressure amplitude A (0 selects 1/gamma so P'(1) = 1)");
  cmd->add_option("--density-floor", cfg.params.density_floor, "step-rejection density floor");
  cmd->add_option("--recipe", cfg.recipe,
                  "initial data: orszag-tang | taylor-green | reconnection | zero | constant");
  cmd->add_option("--amp-v", cfg.amp_v, "velocity amplitude");
  cmd->add_option("--amp-b", cfg.amp_b, "magnetic amplitude");
  cmd->add_option("--t-final", cfg.t_final, "integration horizon");
  cmd->add_option("--dt", cfg.dt, "time step (0 derives it from the CFL bound)");
  cmd->add_option("--cfl", cfg.cfl, "advective CFL constant");
  cmd->add_option("--sample-stride", cfg.sample_stride, "steps between norm samples");
  cmd->add_option("--checkpoint-stride", cfg.checkpoint_stride,
                  "steps between state snapshots (0 disables)");
  cmd->add_option("--outdir", cfg.outdir, "output directory");
  cmd->add_option("--seed", cfg.rng_seed, "rng seed");
}

int finish(const RunResult& res) {
  if (!res.message.empty()) std::cerr << res.message << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral compressible/incompressible MHD laboratory"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a config file");
  app.allow_config_extras(false);

  ExperimentConfig cfg;
  std::string system = "cmhd";

  CLI::App* simulate = app.add_subcommand("simulate", "integrate one system");
  bind_common(simulate, cfg);
  simulate->add_option("--system", system, "cmhd | imhd")
      ->check(CLI::IsMember({"cmhd", "imhd"}));

  CLI::App* sweep = app.add_subcommand("sweep", "bulk-viscosity rate study");
  bind_common(sweep, cfg);
  sweep->add_option("--lambdas", cfg.lambdas, "sweep bulk viscosities (>= 3 values)");
  sweep->add_option("--workers", cfg.workers, "concurrent members (0 = hardware)");

  CLI::App* reconnect = app.add_subcommand("reconnect", "magnetic reconnection certificate run");
  bind_common(reconnect, cfg);
  reconnect->add_option("--recon-M", cfg.recon.M, "core amplitude");
  reconnect->add_option("--recon-T", cfg.recon.T, "target reconnection time");
  reconnect->add_option("--recon-epsilon", cfg.recon.epsilon, "perturbation size");
  reconnect->add_option("--recon-N", cfg.recon.beltrami.N, "Beltrami frequency");
  reconnect->add_option("--recon-perturbation", cfg.recon.perturbation,
                        "saddle | gaussian-linear");
  reconnect->add_option("--recon-lambda", cfg.recon_lambda, "bulk viscosity of the run");
  reconnect->add_option("--portrait-seeds", cfg.portrait_seeds, "field-line portrait seeds");

  CLI::App* besov = app.add_subcommand("besov-check", "functional-inequality verifier batch");
  bind_common(besov, cfg);
  besov->add_option("--samples", cfg.check_samples, "random fields per inequality");
  besov->add_option("--bernstein-samples", cfg.bernstein_samples, "fields per Bernstein band");

  CLI::App* report = app.add_subcommand("report", "summarize a run directory");
  std::string report_dir = "out";
  report->add_option("dir", report_dir, "run directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kConfigError;
  }

  try {
    if (simulate->parsed()) {
      RunResult res = run_simulation(cfg, system == "cmhd");
      std::cout << "simulate " << system << ": t_final = " << res.final_time
                << ", max div b = " << res.max_div_b;
      if (system == "imhd") std::cout << ", energy residual = " << res.energy_residual;
      std::cout << "\n";
      return finish(res);
    }
    if (sweep->parsed()) {
      RunResult res = run_sweep(cfg);
      for (const auto& f : res.fits)
        std::cout << "fit " << f.name << ": slope = " << f.slope
                  << " (target " << f.target << "), residual = " << f.residual << "\n";
      std::cout << "measured M = " << res.measured_M
                << ", reference energy residual = " << res.energy_residual << "\n";
      return finish(res);
    }
    if (reconnect->parsed()) {
      RunResult res = run_reconnection(cfg);
      std::cout << "hyperbolic nulls: " << res.hyperbolic_t0 << " -> " << res.hyperbolic_t1
                << (res.certificate ? "  [RECONNECTION CERTIFICATE]" : "  [no certificate]")
                << "\n";
      if (res.epsilon_warning)
        std::cout << "note: epsilon exceeds the N^{-r-1} smallness guidance\n";
      return finish(res);
    }
    if (besov->parsed()) {
      RunResult res = run_besov_checks(cfg);
      for (const auto& [k, v] : res.check_values) std::cout << k << " = " << v << "\n";
      std::cout << (res.checks_passed ? "all checks passed" : "CHECKS FAILED") << "\n";
      return finish(res);
    }
    if (report->parsed()) {
      for (const char* name : {"fits.csv", "regime.csv", "besov_report.csv", "certificate.txt"}) {
        std::ifstream is(report_dir + "/" + name);
        if (!is) continue;
        std::cout << "== " << name << " ==\n" << is.rdbuf() << "\n";
      }
      return kOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericalFailure;
  }
  return kOk;
}
