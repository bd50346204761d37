#pragma once

#include <stdexcept>

namespace smhd {

// Physical coefficients of the compressible system. P(rho) = A rho^gamma;
// by default A = 1/gamma so that P'(1) = 1.
struct PhysicalParams {
  double mu = 0.05;        // shear viscosity, > 0
  double lambda = 0.0;     // bulk viscosity
  double eta = 0.05;       // magnetic diffusivity; the ideal limit eta = 0
                           // is allowed for frozen-in experiments
  double gamma = 1.4;      // adiabatic exponent, > 1
  double A = 0.0;          // pressure amplitude; 0 means normalized 1/gamma
  double density_floor = 1e-3;

  double nu() const { return lambda + 2.0 * mu; }
  double pressure_amplitude() const { return A > 0.0 ? A : 1.0 / gamma; }
  // P'(1) = A gamma; equals 1 under the default normalization.
  double sound_speed_sq() const { return pressure_amplitude() * gamma; }

  void validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("params: mu must be positive");
    if (!(nu() > 0.0)) throw std::invalid_argument("params: nu = lambda + 2 mu must be positive");
    if (eta < 0.0) throw std::invalid_argument("params: eta must be nonnegative");
    if (!(gamma > 1.0)) throw std::invalid_argument("params: gamma must exceed 1");
    if (!(density_floor > 0.0)) throw std::invalid_argument("params: density floor must be positive");
  }
};

}  // namespace smhd
