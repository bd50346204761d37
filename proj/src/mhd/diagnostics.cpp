#include "mhd/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

SpectralField effective_velocity(const SpectralField& a, const SpectralField& u,
                                 const PhysicalParams& p) {
  SpectralField w = leray_Q(u);
  InvLapGradResult r = inverse_laplacian_gradient(a);
  r.field *= -1.0 / p.nu();
  w += r.field;
  return w;
}

void EnergyBalanceTracker::observe(const IncompressibleState& s) {
  const double e = l2_norm(s.V) * l2_norm(s.V) + l2_norm(s.B) * l2_norm(s.B);
  const double gv = sobolev_norm(s.V, 1.0);
  const double gb = sobolev_norm(s.B, 1.0);
  const double integrand = 2.0 * p_.mu * gv * gv + 2.0 * p_.eta * gb * gb;
  if (!have_first_) {
    have_first_ = true;
    e0_ = e;
  } else {
    dissipated_ += 0.5 * (s.time - last_t_) * (last_integrand_ + integrand);
    if (e0_ > 0.0) worst_ = std::max(worst_, std::abs(e + dissipated_ - e0_) / e0_);
  }
  last_t_ = s.time;
  last_integrand_ = integrand;
}

MBound explicit_M_bound(const SpectralField& V0, const SpectralField& B0,
                        const PhysicalParams& p, double C, const DyadicPartition& part) {
  if (V0.grid().dim() != 2) throw std::invalid_argument("explicit_M_bound: d = 2 only");
  if (!(p.eta > 0.0)) throw std::invalid_argument("explicit_M_bound: eta must be positive");
  const double b0 = besov_norm(V0, {0.0, 2.0, 1.0}, part) + besov_norm(B0, {0.0, 2.0, 1.0}, part);
  const double l2v = l2_norm(V0);
  const double l2b = l2_norm(B0);
  const double invs = std::pow(p.mu, -4.0) + std::pow(p.mu, -3.0) / p.eta +
                      std::pow(p.eta, -3.0) / p.mu + std::pow(p.eta, -4.0);
  const double expo = C * invs * (std::pow(l2v, 4.0) + std::pow(l2b, 4.0));
  MBound out;
  out.log_value = std::log(std::max(C * b0, 1e-300)) + expo;
  out.value = (b0 == 0.0) ? 0.0 : ((out.log_value > 700.0) ? kInf : std::exp(out.log_value));
  return out;
}

}  // namespace smhd
