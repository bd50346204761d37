#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "besov/norms.hpp"
#include "mhd/params.hpp"
#include "mhd/state.hpp"

namespace smhd {

// Time-series accumulator for the difference unknowns (a, u, h). Produces
// the functionals
//   X = ||Qu, a, nu grad a||_{Linf B^{d/2-1}}
//   Y = ||Qu_t + grad a, nu grad^2 Qu, nu grad^2 a^l, grad a^h||_{L1 B^{d/2-1}}
//   Z = ||Pu||_{Linf B^{d/2-1}} + ||h||_{Linf B^{d/2-1}}
//   W = ||Pu_t, grad^2 Pu||_{L1 B^{d/2-1}} + ||h_t, grad^2 h||_{L1 B^{d/2-1}}
// plus the per-channel sup/integral series the sweep monitors. Composite
// ||f, g|| norms are sums of the individual norms; grad^2 is the radial
// |k|^2 multiplier (identical to the Hessian norm at p = 2); the low/high
// split threshold is 2^j nu <= 1; time derivatives must come from the
// assembled right-hand sides, not from differencing states. L1-in-time
// accumulates by trapezoid on the sample stride, so X, Y, Z, W are
// nondecreasing in T by construction.
class EnergyLedger {
 public:
  EnergyLedger(GridPtr g, const PhysicalParams& p,
               std::shared_ptr<const DyadicPartition> part);

  void add_sample(const DifferenceState& d, const SpectralField& a_t,
                  const SpectralField& u_t, const SpectralField& h_t);

  double X() const { return sup("X"); }
  double Y() const { return integral("Y"); }
  double Z() const { return sup("Z"); }
  double W() const { return integral("W"); }

  double sup(const std::string& name) const;
  double integral(const std::string& name) const;
  bool empty() const { return times_.empty(); }

  const std::vector<double>& times() const { return times_; }
  // Instantaneous channel values per sample, ordered as times().
  const std::vector<std::map<std::string, double>>& samples() const { return samples_; }

 private:
  GridPtr grid_;
  PhysicalParams p_;
  std::shared_ptr<const DyadicPartition> part_;
  std::vector<double> times_;
  std::vector<std::map<std::string, double>> samples_;
  std::map<std::string, double> sup_;
  std::map<std::string, double> int_;
  std::map<std::string, double> last_integrand_;
};

// The same machinery for the incompressible reference: the constant
//   Vscript = ||V||_{Linf B^{d/2-1}} + ||V_t, grad^2 V||_{L1 B^{d/2-1}}
//           + ||B||_{L1 B^{d/2+1}} + ||B||_{Linf B^{d/2-1}}
// and the measured M with the (mu, eta)-weighted second derivatives.
class ReferenceLedger {
 public:
  ReferenceLedger(GridPtr g, const PhysicalParams& p,
                  std::shared_ptr<const DyadicPartition> part);

  void add_sample(const IncompressibleState& s, const SpectralField& V_t,
                  const SpectralField& B_t);

  double vscript() const;
  double measured_M() const;

 private:
  GridPtr grid_;
  PhysicalParams p_;
  std::shared_ptr<const DyadicPartition> part_;
  double sup_V_ = 0.0, sup_B_ = 0.0;
  double int_Vt_lap_ = 0.0, int_Bt_lap_ = 0.0;      // unweighted (Vscript)
  double int_Vt_mu_lap_ = 0.0, int_Bt_eta_lap_ = 0.0;  // weighted (M)
  double int_B_high_ = 0.0;                          // ||B||_{L1 B^{d/2+1}}
  double last_t_ = 0.0;
  bool have_last_ = false;
  double li_vt_ = 0.0, li_bt_ = 0.0, li_vtw_ = 0.0, li_btw_ = 0.0, li_bh_ = 0.0;
};

}  // namespace smhd
