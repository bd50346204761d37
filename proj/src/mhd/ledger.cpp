#include "mhd/ledger.hpp"

#include <stdexcept>

namespace smhd {

EnergyLedger::EnergyLedger(GridPtr g, const PhysicalParams& p,
                           std::shared_ptr<const DyadicPartition> part)
    : grid_(std::move(g)), p_(p), part_(std::move(part)) {}

void EnergyLedger::add_sample(const DifferenceState& d, const SpectralField& a_t,
                              const SpectralField& u_t, const SpectralField& h_t) {
  (void)a_t;  // the continuity derivative enters no monitored channel
  const double sigma = 0.5 * grid_->dim() - 1.0;
  const double nu = p_.nu();
  const DyadicPartition& part = *part_;
  const BesovIndex bs{sigma, 2.0, 1.0};

  const SpectralField Qu = leray_Q(d.u);
  const SpectralField Pu = d.u - Qu;
  const SpectralField Qut = leray_Q(u_t);
  const SpectralField Put = u_t - Qut;

  std::map<std::string, double> v;
  v["qu"] = besov_norm(Qu, bs, part);
  v["a_sigma"] = besov_norm(d.a, bs, part);
  v["grad_a"] = besov_kpow_norm(d.a, sigma, 1.0, part);
  v["a_crit"] = besov_norm(d.a, {0.5 * grid_->dim(), 2.0, 1.0}, part);
  v["pu"] = besov_norm(Pu, bs, part);
  v["h"] = besov_norm(d.h, bs, part);
  v["X"] = v["qu"] + v["a_sigma"] + nu * v["grad_a"];
  v["Z"] = v["pu"] + v["h"];

  // Y integrand: ||Qu_t + grad a|| + nu||grad^2 Qu|| + nu||grad^2 a^l|| + ||grad a^h||
  SpectralField qta = Qut;
  qta += gradient(d.a);
  const LowHighSplit asplit = low_high_split(d.a, nu, part);
  v["y_qta"] = besov_norm(qta, bs, part);
  v["y_lap_qu"] = besov_kpow_norm(Qu, sigma, 2.0, part);
  v["Y"] = v["y_qta"] + nu * v["y_lap_qu"] + nu * besov_kpow_norm(asplit.low, sigma, 2.0, part) +
           besov_kpow_norm(asplit.high, sigma, 1.0, part);

  // W integrand and the (mu, eta)-weighted dissipative channels of the
  // convergence estimate
  v["put"] = besov_norm(Put, bs, part);
  v["lap_pu"] = besov_kpow_norm(Pu, sigma, 2.0, part);
  v["ht"] = besov_norm(h_t, bs, part);
  v["lap_h"] = besov_kpow_norm(d.h, sigma, 2.0, part);
  v["W"] = v["put"] + v["lap_pu"] + v["ht"] + v["lap_h"];
  v["diss_pu"] = v["put"] + p_.mu * v["lap_pu"];
  v["diss_h"] = v["ht"] + p_.eta * v["lap_h"];

  if (!times_.empty() && d.time < times_.back())
    throw std::invalid_argument("EnergyLedger: samples must be time ordered");

  for (const auto& [name, val] : v) {
    auto it = sup_.find(name);
    if (it == sup_.end() || val > it->second) sup_[name] = val;
  }
  static const char* integrands[] = {"Y", "W", "diss_pu", "diss_h", "y_lap_qu"};
  if (!times_.empty()) {
    const double dt = d.time - times_.back();
    for (const char* name : integrands)
      int_[name] += 0.5 * dt * (last_integrand_[name] + v[name]);
  }
  for (const char* name : integrands) last_integrand_[name] = v[name];

  times_.push_back(d.time);
  samples_.push_back(std::move(v));
}

double EnergyLedger::sup(const std::string& name) const {
  auto it = sup_.find(name);
  return it == sup_.end() ? 0.0 : it->second;
}

double EnergyLedger::integral(const std::string& name) const {
  auto it = int_.find(name);
  return it == int_.end() ? 0.0 : it->second;
}

ReferenceLedger::ReferenceLedger(GridPtr g, const PhysicalParams& p,
                                 std::shared_ptr<const DyadicPartition> part)
    : grid_(std::move(g)), p_(p), part_(std::move(part)) {}

void ReferenceLedger::add_sample(const IncompressibleState& s, const SpectralField& V_t,
                                 const SpectralField& B_t) {
  const double sigma = 0.5 * grid_->dim() - 1.0;
  const DyadicPartition& part = *part_;
  const BesovIndex bs{sigma, 2.0, 1.0};
  sup_V_ = std::max(sup_V_, besov_norm(s.V, bs, part));
  sup_B_ = std::max(sup_B_, besov_norm(s.B, bs, part));
  const double vt = besov_norm(V_t, bs, part);
  const double bt = besov_norm(B_t, bs, part);
  const double lap_v = besov_kpow_norm(s.V, sigma, 2.0, part);
  const double lap_b = besov_kpow_norm(s.B, sigma, 2.0, part);
  const double b_high = besov_norm(s.B, {sigma + 2.0, 2.0, 1.0}, part);
  const double i_vt = vt + lap_v;
  const double i_bt = bt + lap_b;
  const double i_vtw = vt + p_.mu * lap_v;
  const double i_btw = bt + p_.eta * lap_b;
  if (have_last_) {
    const double dt = s.time - last_t_;
    int_Vt_lap_ += 0.5 * dt * (li_vt_ + i_vt);
    int_Bt_lap_ += 0.5 * dt * (li_bt_ + i_bt);
    int_Vt_mu_lap_ += 0.5 * dt * (li_vtw_ + i_vtw);
    int_Bt_eta_lap_ += 0.5 * dt * (li_btw_ + i_btw);
    int_B_high_ += 0.5 * dt * (li_bh_ + b_high);
  }
  li_vt_ = i_vt;
  li_bt_ = i_bt;
  li_vtw_ = i_vtw;
  li_btw_ = i_btw;
  li_bh_ = b_high;
  last_t_ = s.time;
  have_last_ = true;
}

double ReferenceLedger::vscript() const {
  return sup_V_ + int_Vt_lap_ + int_B_high_ + sup_B_;
}

double ReferenceLedger::measured_M() const {
  return sup_V_ + int_Vt_mu_lap_ + sup_B_ + int_Bt_eta_lap_;
}

}  // namespace smhd
