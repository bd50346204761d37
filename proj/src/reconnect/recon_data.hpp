#pragma once

#include "mhd/params.hpp"
#include "reconnect/beltrami.hpp"

namespace smhd {

// Initial data for the reconnection experiment:
//   V0 = M curl(phi B_N)
//   B0 = V0 + eps e^{-eta T Lap} curl(psi W)
// The backward heat factor cancels against the forward evolution, so the
// perturbation resurfaces undamped at t = T while the Beltrami core has
// decayed by e^{-eta T N^2}; its hyperbolic zero then dominates the field.
struct ReconnectionData {
  double M = 0.25;        // core amplitude multiplier
  double T = 2.0;         // target reconnection time
  double epsilon = 0.05;  // perturbation size (also ~ |V0 - B0|)
  BeltramiSpec beltrami{1.0, 0.1, 0.1, 4};
  // Envelope widths as fractions of L; 0 selects the constant envelope
  // (the natural torus substitute for the decaying envelopes of the
  // whole-space construction).
  double phi_sigma = 0.0;
  double psi_sigma = 0.0;
  // "saddle": a band-limited trigonometric perturbation whose curl potential
  //   W = (-Lap)^{-1} curl G is exposed, with curl(psi W) = G having an
  //   analytic hyperbolic zero of type diag(1, 1, -2) at the box center.
  // "gaussian-linear": a Gaussian-enveloped linear hyperbolic field,
  //   divergence-free projected and band limited, then curl(psi W); kept for
  //   experimentation -- its curl is a near-gradient cross product whose
  //   zeros are degenerate, so it cannot certify a hyperbolic equilibrium.
  std::string perturbation = "saddle";
  int band_limit = 2;  // |m_i| cap on the perturbation before backward heat
};

struct ReconnectionFields {
  SpectralField V0;
  SpectralField B0;
  SpectralField perturbation_curl;  // curl(psi W), before the backward factor
  SpectralField W;                  // the exposed perturbing potential
  bool epsilon_warning = false;     // eps > N^{-r-1} (r = 3): outside the
                                    // paper's smallness guidance (c unknown)
};

ReconnectionFields build_reconnection_data(const ReconnectionData& rd, GridPtr g,
                                           const PhysicalParams& p);

}  // namespace smhd
