#include "harness/recipes.hpp"

#include <cmath>

namespace smhd {

namespace {

InitialData orszag_tang(const ExperimentConfig& cfg, GridPtr g) {
  InitialData d{SpectralField(g, 1), SpectralField(g, g->dim()), SpectralField(g, g->dim()), false};
  RealField x = coordinates(g, 0), y = coordinates(g, 1);
  RealField vr(g, g->dim()), br(g, g->dim());
  const double q = 2.0 * M_PI / g->L();
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    vr.comp[0][i] = -cfg.amp_v * std::sin(q * y.comp[0][i]);
    vr.comp[1][i] = cfg.amp_v * std::sin(q * x.comp[0][i]);
    br.comp[0][i] = -cfg.amp_b * std::sin(q * y.comp[0][i]);
    br.comp[1][i] = cfg.amp_b * std::sin(2.0 * q * x.comp[0][i]);
  }
  if (g->dim() == 3) {
    // extruded variant with a weak z-dependence so 3-D runs are exercised
    RealField z = coordinates(g, 2);
    for (std::size_t i = 0; i < g->real_size(); ++i) {
      vr.comp[2][i] = 0.1 * cfg.amp_v * std::sin(q * x.comp[0][i]) * std::cos(q * z.comp[0][i]);
      br.comp[2][i] = 0.0;
    }
  }
  d.v0 = fft_forward(vr);
  d.b0 = leray_P(fft_forward(br));
  return d;
}

InitialData taylor_green(const ExperimentConfig& cfg, GridPtr g) {
  InitialData d{SpectralField(g, 1), SpectralField(g, g->dim()), SpectralField(g, g->dim()), false};
  RealField x = coordinates(g, 0), y = coordinates(g, 1);
  RealField vr(g, g->dim()), br(g, g->dim());
  const double q = 2.0 * M_PI / g->L();
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    vr.comp[0][i] = cfg.amp_v * std::sin(q * x.comp[0][i]) * std::cos(q * y.comp[0][i]);
    vr.comp[1][i] = -cfg.amp_v * std::cos(q * x.comp[0][i]) * std::sin(q * y.comp[0][i]);
    // single magnetic mode
    br.comp[0][i] = -cfg.amp_b * std::sin(q * y.comp[0][i]);
    br.comp[1][i] = cfg.amp_b * std::sin(q * x.comp[0][i]);
  }
  d.v0 = fft_forward(vr);
  d.b0 = fft_forward(br);
  return d;
}

InitialData constant_state(const ExperimentConfig& cfg, GridPtr g) {
  InitialData d{SpectralField(g, 1), SpectralField(g, g->dim()), SpectralField(g, g->dim()), false};
  RealField vr(g, g->dim());
  for (std::size_t i = 0; i < g->real_size(); ++i) vr.comp[0][i] = cfg.amp_v;
  d.v0 = fft_forward(vr);
  return d;
}

InitialData reconnection(const ExperimentConfig& cfg, GridPtr g) {
  ReconnectionFields f = build_reconnection_data(cfg.recon, g, cfg.params);
  InitialData d{SpectralField(g, 1), f.V0, f.B0, f.epsilon_warning};
  return d;
}

}  // namespace

InitialData build_initial_data(const ExperimentConfig& cfg, GridPtr g) {
  if (cfg.recipe == "orszag-tang") return orszag_tang(cfg, g);
  if (cfg.recipe == "taylor-green") return taylor_green(cfg, g);
  if (cfg.recipe == "reconnection") return reconnection(cfg, g);
  if (cfg.recipe == "constant") return constant_state(cfg, g);
  // zero
  return InitialData{SpectralField(g, 1), SpectralField(g, g->dim()),
                     SpectralField(g, g->dim()), false};
}

}  // namespace smhd
