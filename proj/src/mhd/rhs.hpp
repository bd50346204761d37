#pragma once

#include "mhd/params.hpp"
#include "mhd/state.hpp"

namespace smhd {

// Signals a pointwise density below params.density_floor; the integrator
// catches it and retries with a halved step.
struct DensityFloorError : std::runtime_error {
  explicit DensityFloorError(double rho_min)
      : std::runtime_error("density floor breached"), rho_min(rho_min) {}
  double rho_min;
};

// P(1 + a) = A (1+a)^gamma, evaluated pointwise and dealiased.
SpectralField pressure_field(const SpectralField& a, const PhysicalParams& p);
// k(a) = P'(1+a) - P'(1).
SpectralField k_of_a(const SpectralField& a, const PhysicalParams& p);

struct CompressibleRhs {
  SpectralField a_t, v_t, b_t;
};

// Full right-hand side of the compressible system:
//   a_t  = -div((1+a) v)
//   v_t  = -v.grad v + (1/rho)[mu Lap v + (lambda+mu) grad div v - grad P
//                              + b.grad b - grad|b|^2/2]
//   b_t  = curl(v x b) + eta Lap b
// All quadratic products are dealiased; cubic terms are two successive
// dealiased binary products. The induction term is assembled in curl form,
// which is pointwise identical to -b div v - v.grad b + b.grad v for
// solenoidal b and keeps div b_t = 0 to spectral precision.
CompressibleRhs rhs_cmhd(const CompressibleState& s, const PhysicalParams& p);

struct IncompressibleRhs {
  SpectralField V_t, B_t;
};

// V_t = P[B.grad B - V.grad V] + mu Lap V,  B_t = curl(V x B) + eta Lap B.
// The pressure gradient is eliminated by the Leray projection; recover Pi
// with incompressible_pressure. Inputs must be solenoidal.
IncompressibleRhs rhs_imhd(const IncompressibleState& s, const PhysicalParams& p,
                           double solenoidal_tol = 1e-6);

// Pi with grad Pi = Q[B.grad B - V.grad V]; returned as the scalar field
// -(-Lap)^{-1} div(B.grad B - V.grad V), zero mean.
SpectralField incompressible_pressure(const IncompressibleState& s, const PhysicalParams& p);

}  // namespace smhd
