#include "mhd/stepper.hpp"

#include <cmath>

namespace smhd {

namespace {
constexpr Complex kI{0.0, 1.0};

double max_speed(const SpectralField& v) {
  RealField r = fft_inverse(v);
  double m = 0.0;
  for (std::size_t i = 0; i < r.comp[0].size(); ++i) {
    double s2 = 0.0;
    for (int c = 0; c < r.ncomp(); ++c) s2 += r.comp[c][i] * r.comp[c][i];
    m = std::max(m, s2);
  }
  return std::sqrt(m);
}
}  // namespace

CompressibleStepper::CompressibleStepper(GridPtr g, const PhysicalParams& p, double dt)
    : grid_(std::move(g)), p_(p), dt_(dt) {
  p_.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("stepper: dt must be positive");
  const double tau = 0.5 * dt_;
  const double nu = p_.nu();
  const double c2 = p_.sound_speed_sq();
  const std::size_t ns = grid_->spectral_size();
  const auto& k2 = grid_->k2();
  em_half_.resize(ns);
  eb_half_.resize(ns);
  e00_.resize(ns);
  e11_.resize(ns);
  esa_.resize(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    em_half_[i] = std::exp(-p_.mu * k2[i] * tau);
    eb_half_[i] = std::exp(-p_.eta * k2[i] * tau);
    const double s2 = k2[i];
    if (s2 == 0.0) {
      e00_[i] = 1.0;
      e11_[i] = 1.0;
      esa_[i] = 0.0;
      continue;
    }
    const double s = std::sqrt(s2);
    const double h = 0.5 * nu * s2;
    const double disc = h * h - c2 * s2;
    double ch, shw;
    if (disc >= 0.0) {
      const double w = std::sqrt(disc);
      // e^{-h tau} cosh(w tau) etc. evaluated via exp differences so the
      // overdamped branch cannot overflow
      const double ep = std::exp((w - h) * tau);
      const double em = std::exp(-(w + h) * tau);
      ch = 0.5 * (ep + em);
      const double sh = 0.5 * (ep - em);
      shw = (w > 0.0) ? sh / w : tau * std::exp(-h * tau);
    } else {
      const double w = std::sqrt(-disc);
      const double damp = std::exp(-h * tau);
      ch = damp * std::cos(w * tau);
      shw = damp * std::sin(w * tau) / w;
    }
    e00_[i] = ch + shw * h;
    e11_[i] = ch - shw * h;
    esa_[i] = shw * s;
  }
}

CompressibleState CompressibleStepper::apply_half(const CompressibleState& s) const {
  const Grid& g = *grid_;
  const int d = g.dim();
  const double c2 = p_.sound_speed_sq();
  const std::size_t ns = g.spectral_size();
  const auto& k2 = g.k2();
  CompressibleState out = s;
  for (std::size_t i = 0; i < ns; ++i) {
    if (k2[i] == 0.0) continue;
    const double inv_s = 1.0 / std::sqrt(k2[i]);
    Complex kdotv{0.0, 0.0};
    for (int c = 0; c < d; ++c) kdotv += g.k(c)[i] * s.v.at(c, i);
    const Complex q = kdotv * inv_s;
    const Complex a = s.a.at(0, i);
    const Complex a_new = e00_[i] * a - kI * esa_[i] * q;
    const Complex q_new = -kI * c2 * esa_[i] * a + e11_[i] * q;
    out.a.at(0, i) = a_new;
    for (int c = 0; c < d; ++c) {
      const double khat = g.k(c)[i] * inv_s;
      const Complex vT = s.v.at(c, i) - khat * q;
      out.v.at(c, i) = khat * q_new + em_half_[i] * vT;
    }
    for (int c = 0; c < d; ++c) out.b.at(c, i) *= eb_half_[i];
  }
  return out;
}

CompressibleRhs CompressibleStepper::nonlinear_residual(const CompressibleState& s) const {
  CompressibleRhs f = rhs_cmhd(s, p_);
  const Grid& g = *grid_;
  const int d = g.dim();
  const double c2 = p_.sound_speed_sq();
  const auto& k2 = g.k2();
  for (std::size_t i = 0; i < g.spectral_size(); ++i) {
    Complex kdotv{0.0, 0.0};
    for (int c = 0; c < d; ++c) kdotv += g.k(c)[i] * s.v.at(c, i);
    // remove: a_t <- -div v ; v_t <- -mu k2 v - (lambda+mu) k (k.v) - i c2 k a ; b_t <- -eta k2 b
    f.a_t.at(0, i) += kI * kdotv;
    for (int c = 0; c < d; ++c) {
      const double kc = g.k(c)[i];
      f.v_t.at(c, i) += p_.mu * k2[i] * s.v.at(c, i) + (p_.lambda + p_.mu) * kc * kdotv +
                        kI * c2 * kc * s.a.at(0, i);
      f.b_t.at(c, i) += p_.eta * k2[i] * s.b.at(c, i);
    }
  }
  return f;
}

CompressibleState CompressibleStepper::step(const CompressibleState& s) const {
  const double limit = cfl_limit(s, p_);
  if (dt_ > limit) throw CflError(dt_, limit);
  CompressibleState sh = apply_half(s);
  CompressibleRhs r1 = nonlinear_residual(sh);
  CompressibleState pred = sh;
  pred.a += dt_ * r1.a_t;
  pred.v += dt_ * r1.v_t;
  pred.b += dt_ * r1.b_t;
  CompressibleRhs r2 = nonlinear_residual(pred);
  CompressibleState mid = sh;
  mid.a += 0.5 * dt_ * (r1.a_t + r2.a_t);
  mid.v += 0.5 * dt_ * (r1.v_t + r2.v_t);
  mid.b += 0.5 * dt_ * (r1.b_t + r2.b_t);
  CompressibleState out = apply_half(mid);
  out.b = leray_P(out.b);  // roundoff re-projection
  out.time = s.time + dt_;
  return out;
}

CompressibleState CompressibleStepper::advance(const CompressibleState& s, int max_halvings) const {
  try {
    return step(s);
  } catch (const DensityFloorError&) {
    if (max_halvings <= 0) throw;
  }
  CompressibleStepper half(grid_, p_, 0.5 * dt_);
  CompressibleState mid = half.advance(s, max_halvings - 1);
  return half.advance(mid, max_halvings - 1);
}

double CompressibleStepper::cfl_limit(const CompressibleState& s, const PhysicalParams& p,
                                      double cfl) {
  RealField ar = fft_inverse(s.a);
  double rho_max = 0.0;
  for (double v : ar.comp[0]) rho_max = std::max(rho_max, 1.0 + v);
  const double cs = std::sqrt(p.sound_speed_sq() * std::pow(std::max(rho_max, 1.0), p.gamma - 1.0));
  const double speed = max_speed(s.v) + max_speed(s.b) + cs;
  return cfl * s.a.grid().dx() / speed;
}

IncompressibleStepper::IncompressibleStepper(GridPtr g, const PhysicalParams& p, double dt)
    : grid_(std::move(g)), p_(p), dt_(dt) {
  p_.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("stepper: dt must be positive");
  const double tau = 0.5 * dt_;
  const auto& k2 = grid_->k2();
  ev_half_.resize(grid_->spectral_size());
  eb_half_.resize(grid_->spectral_size());
  for (std::size_t i = 0; i < grid_->spectral_size(); ++i) {
    ev_half_[i] = std::exp(-p_.mu * k2[i] * tau);
    eb_half_[i] = std::exp(-p_.eta * k2[i] * tau);
  }
}

IncompressibleRhs IncompressibleStepper::nonlinear_residual(const IncompressibleState& s) const {
  IncompressibleRhs f = rhs_imhd(s, p_);
  const auto& k2 = grid_->k2();
  for (int c = 0; c < grid_->dim(); ++c)
    for (std::size_t i = 0; i < grid_->spectral_size(); ++i) {
      f.V_t.at(c, i) += p_.mu * k2[i] * s.V.at(c, i);
      f.B_t.at(c, i) += p_.eta * k2[i] * s.B.at(c, i);
    }
  return f;
}

IncompressibleState IncompressibleStepper::step(const IncompressibleState& s) const {
  const double limit = cfl_limit(s, p_);
  if (dt_ > limit) throw CflError(dt_, limit);
  auto scale = [&](IncompressibleState st) {
    for (int c = 0; c < grid_->dim(); ++c)
      for (std::size_t i = 0; i < grid_->spectral_size(); ++i) {
        st.V.at(c, i) *= ev_half_[i];
        st.B.at(c, i) *= eb_half_[i];
      }
    return st;
  };
  IncompressibleState sh = scale(s);
  IncompressibleRhs r1 = nonlinear_residual(sh);
  IncompressibleState pred = sh;
  pred.V += dt_ * r1.V_t;
  pred.B += dt_ * r1.B_t;
  IncompressibleRhs r2 = nonlinear_residual(pred);
  IncompressibleState mid = sh;
  mid.V += 0.5 * dt_ * (r1.V_t + r2.V_t);
  mid.B += 0.5 * dt_ * (r1.B_t + r2.B_t);
  IncompressibleState out = scale(mid);
  out.V = leray_P(out.V);
  out.B = leray_P(out.B);
  out.time = s.time + dt_;
  return out;
}

double IncompressibleStepper::cfl_limit(const IncompressibleState& s, const PhysicalParams& p,
                                        double cfl) {
  const double speed = max_speed(s.V) + max_speed(s.B);
  if (speed < 1e-12) return 1e9;
  return cfl * s.V.grid().dx() / speed;
}

}  // namespace smhd
