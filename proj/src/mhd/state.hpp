#pragma once

#include "spectral/field.hpp"
#include "spectral/ops.hpp"

namespace smhd {

// Compressible snapshot in the unknowns (a, v, b), a = rho - 1.
struct CompressibleState {
  double time = 0.0;
  SpectralField a;  // scalar
  SpectralField v;  // vector
  SpectralField b;  // vector

  static CompressibleState zero(GridPtr g) {
    return {0.0, SpectralField(g, 1), SpectralField(g, g->dim()), SpectralField(g, g->dim())};
  }
};

// Incompressible snapshot (V, B); the pressure is recovered on demand.
struct IncompressibleState {
  double time = 0.0;
  SpectralField V;
  SpectralField B;

  static IncompressibleState zero(GridPtr g) {
    return {0.0, SpectralField(g, g->dim()), SpectralField(g, g->dim())};
  }
};

// Difference unknowns (a, u, h) = (rho - 1, v - V, b - B).
struct DifferenceState {
  double time = 0.0;
  SpectralField a;
  SpectralField u;
  SpectralField h;
};

DifferenceState difference_state(const CompressibleState& comp, const IncompressibleState& incomp);

// ||div w||_{L^2} / ||w||_{L^2}, 0 for the zero field.
double relative_divergence(const SpectralField& w);

}  // namespace smhd
