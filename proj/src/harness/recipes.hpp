#pragma once

#include "harness/config.hpp"
#include "mhd/state.hpp"

namespace smhd {

// Initial data described by a config: (a0, v0, b0) for the compressible
// system; the incompressible data are the Leray projections (V0, B0) of the
// same fields. All recipes produce divergence-free b0.
struct InitialData {
  SpectralField a0;
  SpectralField v0;
  SpectralField b0;
  bool epsilon_warning = false;  // reconnection recipe only
};

InitialData build_initial_data(const ExperimentConfig& cfg, GridPtr g);

}  // namespace smhd
