#include "harness/config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "harness/csvout.hpp"

namespace smhd {

void ExperimentConfig::validate(const std::string& kind) const {
  if (dim != 2 && dim != 3) throw ConfigError("grid.dim must be 2 or 3");
  if (n < 8 || (n & (n - 1)) != 0) throw ConfigError("grid.n must be a power of two >= 8");
  if (!(box_length > 0.0)) throw ConfigError("grid.box_length must be positive");
  try {
    params.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("physics: ") + e.what());
  }
  static const std::set<std::string> recipes = {"orszag-tang", "taylor-green", "reconnection",
                                                "zero", "constant"};
  if (!recipes.count(recipe)) throw ConfigError("recipe '" + recipe + "' is not known");
  if (!(t_final > 0.0)) throw ConfigError("t_final must be positive");
  if (dt < 0.0) throw ConfigError("dt must be nonnegative (0 selects the CFL bound)");
  if (!(cfl > 0.0) || cfl > 1.0) throw ConfigError("cfl must be in (0, 1]");
  if (sample_stride < 1) throw ConfigError("sample_stride must be >= 1");
  if (checkpoint_stride < 0) throw ConfigError("checkpoint_stride must be >= 0");
  if (kind == "sweep") {
    if (lambdas.size() < 3) throw ConfigError("sweep needs at least 3 lambda values");
    for (double l : lambdas)
      if (!(l + 2.0 * params.mu > 0.0)) throw ConfigError("sweep lambda breaks nu > 0");
  }
  if (kind == "reconnect") {
    if (dim != 3) throw ConfigError("reconnect requires grid.dim = 3");
    if (std::abs(params.mu - params.eta) > 1e-15)
      throw ConfigError("reconnect requires mu = eta");
  }
  if (check_samples < 1 || bernstein_samples < 1)
    throw ConfigError("besov-check sample counts must be positive");
}

std::string ExperimentConfig::dump(const std::string& kind) const {
  std::ostringstream os;
  auto put = [&](const char* k, const std::string& v) { os << k << "=" << v << "\n"; };
  put("kind", kind);
  put("dim", std::to_string(dim));
  put("n", std::to_string(n));
  put("box_length", CsvWriter::num(box_length));
  put("mu", CsvWriter::num(params.mu));
  put("lambda", CsvWriter::num(params.lambda));
  put("eta", CsvWriter::num(params.eta));
  put("gamma", CsvWriter::num(params.gamma));
  put("pressure_A", CsvWriter::num(params.A));
  put("density_floor", CsvWriter::num(params.density_floor));
  put("recipe", recipe);
  put("amp_v", CsvWriter::num(amp_v));
  put("amp_b", CsvWriter::num(amp_b));
  put("t_final", CsvWriter::num(t_final));
  put("dt", CsvWriter::num(dt));
  put("cfl", CsvWriter::num(cfl));
  put("sample_stride", std::to_string(sample_stride));
  put("checkpoint_stride", std::to_string(checkpoint_stride));
  put("rng_seed", std::to_string(rng_seed));
  if (kind == "sweep") {
    std::ostringstream ls;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      if (i) ls << ";";
      ls << CsvWriter::num(lambdas[i]);
    }
    put("lambdas", ls.str());
    put("workers", std::to_string(workers));
  }
  if (kind == "reconnect") {
    put("recon.M", CsvWriter::num(recon.M));
    put("recon.T", CsvWriter::num(recon.T));
    put("recon.epsilon", CsvWriter::num(recon.epsilon));
    put("recon.N", std::to_string(recon.beltrami.N));
    put("recon.abc_A", CsvWriter::num(recon.beltrami.A));
    put("recon.abc_B", CsvWriter::num(recon.beltrami.B));
    put("recon.abc_C", CsvWriter::num(recon.beltrami.C));
    put("recon.phi_sigma", CsvWriter::num(recon.phi_sigma));
    put("recon.psi_sigma", CsvWriter::num(recon.psi_sigma));
    put("recon.perturbation", recon.perturbation);
    put("recon.band_limit", std::to_string(recon.band_limit));
    put("recon_lambda", CsvWriter::num(recon_lambda));
    put("portrait_seeds", std::to_string(portrait_seeds));
  }
  if (kind == "besov-check") {
    put("check_samples", std::to_string(check_samples));
    put("bernstein_samples", std::to_string(bernstein_samples));
  }
  return os.str();
}

}  // namespace smhd
