#pragma once

#include <array>
#include <memory>

#include "reconnect/eval.hpp"
#include "spectral/ops.hpp"

namespace smhd {

// Integrates the flow map Phi of a velocity history and its deformation
// gradient along a sample of seeds,
//   d/dt Phi = v(t, Phi),   d/dt grad Phi = grad v(t, Phi) . grad Phi,
// stepping with Heun on the (v_n, v_{n+1}) pairs the solver produces. Used
// to test the frozen-in transport formula b(t, Phi_t(x)) = grad Phi_t(x)
// b_0(x) in the ideal regime.
class FlowMapIntegrator {
 public:
  FlowMapIntegrator(GridPtr g, std::vector<std::array<double, 3>> seeds,
                    double exclusion_threshold = 100.0);

  // call once with the initial velocity before stepping
  void begin(const SpectralField& v0);
  // advance all seeds across one solver step [t, t + dt]
  void advance(const SpectralField& v_next, double dt);

  const std::vector<std::array<double, 3>>& seeds() const { return seeds_; }
  const std::vector<std::array<double, 3>>& positions() const { return pos_; }
  const std::vector<std::array<double, 9>>& deformation() const { return grad_; }
  int excluded_count() const;

  // max over included seeds of |b_final(Phi) - grad Phi b0| relative to the
  // largest transported magnitude.
  double transport_residual(const SpectralField& b0, const SpectralField& b_final) const;

 private:
  struct Interp;  // v and grad v interpolators at one time level
  std::shared_ptr<Interp> make_interp(const SpectralField& v) const;

  GridPtr grid_;
  double excl_;
  std::vector<std::array<double, 3>> seeds_;
  std::vector<std::array<double, 3>> pos_;
  std::vector<std::array<double, 9>> grad_;
  std::vector<bool> excluded_;
  std::shared_ptr<Interp> prev_;
};

// Uniformly spread deterministic seed sample.
std::vector<std::array<double, 3>> lattice_seeds(GridPtr g, int count);

}  // namespace smhd
