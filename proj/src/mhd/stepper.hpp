#pragma once

#include "mhd/rhs.hpp"

namespace smhd {

struct CflError : std::runtime_error {
  CflError(double dt, double limit)
      : std::runtime_error("time step exceeds the advective CFL bound"), dt(dt), limit(limit) {}
  double dt, limit;
};

// Strang-split exponential integrator, second order in dt:
//   u(t+dt) = E_{dt/2} . Heun_{dt}[N] . E_{dt/2} u(t)
// where E integrates the constant-coefficient linear part exactly per mode:
// a scalar factor exp(-mu k^2 t) on the transverse velocity, exp(-eta k^2 t)
// on b, and a 2x2 matrix exponential on (a_hat, khat.v_hat) coupling the
// linearized pressure gradient, div in the continuity equation, and the
// longitudinal viscosity nu = lambda + 2 mu. Folding the acoustic coupling
// into the exponential keeps the scheme uniformly stable and accurate in
// the large-nu limit, where any explicit treatment of grad(a) suffers a
// nu-independent O(dt) error floor (stiff order reduction). The nonlinear
// remainder N = rhs - linear is advanced by explicit Heun.
class CompressibleStepper {
 public:
  CompressibleStepper(GridPtr g, const PhysicalParams& p, double dt);

  double dt() const { return dt_; }
  const PhysicalParams& params() const { return p_; }

  // One step of size dt(); throws CflError / DensityFloorError.
  CompressibleState step(const CompressibleState& s) const;

  // step() with bounded dt-halving retries on a density floor breach; the
  // retries substep so the outer time grid is preserved.
  CompressibleState advance(const CompressibleState& s, int max_halvings = 4) const;

  // Advective CFL bound 0.4 dx / (max|v| + max|b| + max sound speed).
  static double cfl_limit(const CompressibleState& s, const PhysicalParams& p, double cfl = 0.4);

  // Nonlinear remainder N(s) = rhs_cmhd(s) - L s (exposed for tests).
  CompressibleRhs nonlinear_residual(const CompressibleState& s) const;

 private:
  CompressibleState apply_half(const CompressibleState& s) const;

  GridPtr grid_;
  PhysicalParams p_;
  double dt_;
  // half-step propagator tables per spectral index
  std::vector<double> em_half_;  // exp(-mu k2 dt/2)
  std::vector<double> eb_half_;  // exp(-eta k2 dt/2)
  std::vector<double> e00_, e11_, esa_;  // block: a' = e00 a - i esa q ; q' = -i c2 esa a + e11 q
};

class IncompressibleStepper {
 public:
  IncompressibleStepper(GridPtr g, const PhysicalParams& p, double dt);

  double dt() const { return dt_; }
  const PhysicalParams& params() const { return p_; }

  IncompressibleState step(const IncompressibleState& s) const;

  static double cfl_limit(const IncompressibleState& s, const PhysicalParams& p, double cfl = 0.4);

  IncompressibleRhs nonlinear_residual(const IncompressibleState& s) const;

 private:
  GridPtr grid_;
  PhysicalParams p_;
  double dt_;
  std::vector<double> ev_half_, eb_half_;
};

}  // namespace smhd
