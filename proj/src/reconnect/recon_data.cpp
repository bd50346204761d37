#include "reconnect/recon_data.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

namespace {

// periodized gaussian bump, centered, smooth on the torus
double wrapped_gauss(double u, double sigma, double L) {
  double s = 0.0;
  for (int n = -3; n <= 3; ++n) {
    const double d = u + n * L;
    s += std::exp(-0.5 * d * d / (sigma * sigma));
  }
  return s;
}

RealField envelope(GridPtr g, double sigma_frac) {
  RealField e(g, 1);
  if (sigma_frac <= 0.0) {
    for (auto& v : e.comp[0]) v = 1.0;
    return e;
  }
  const double L = g->L();
  const double sigma = sigma_frac * L;
  RealField x = coordinates(g, 0), y = coordinates(g, 1), z = coordinates(g, 2);
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    e.comp[0][i] = wrapped_gauss(x.comp[0][i] - 0.5 * L, sigma, L) *
                   wrapped_gauss(y.comp[0][i] - 0.5 * L, sigma, L) *
                   wrapped_gauss(z.comp[0][i] - 0.5 * L, sigma, L);
  }
  return e;
}

SpectralField band_limit(const SpectralField& f, int mcap) {
  SpectralField out = f;
  const Grid& g = f.grid();
  for (std::size_t i = 0; i < g.spectral_size(); ++i) {
    bool keep = true;
    for (int a = 0; a < 3; ++a)
      if (std::abs(g.mode(a, i)) > mcap) keep = false;
    if (!keep)
      for (int c = 0; c < f.ncomp(); ++c) out.at(c, i) = Complex{0.0, 0.0};
  }
  return out;
}

// div-free trig field with a hyperbolic zero diag(1,1,-2) at the box center;
// every mode satisfies |k|^2 = 2
SpectralField saddle_field(GridPtr g) {
  const double c = 0.5 * g->L();
  RealField x = coordinates(g, 0), y = coordinates(g, 1), z = coordinates(g, 2);
  RealField f(g, 3);
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    const double xt = x.comp[0][i] - c, yt = y.comp[0][i] - c, zt = z.comp[0][i] - c;
    f.comp[0][i] = std::sin(xt) * std::cos(zt);
    f.comp[1][i] = std::sin(yt) * std::cos(zt);
    f.comp[2][i] = -(std::cos(xt) + std::cos(yt)) * std::sin(zt);
  }
  return fft_forward(f);
}

SpectralField gaussian_linear_curl(GridPtr g, const ReconnectionData& rd) {
  const double Lb = g->L();
  const double c = 0.5 * Lb;
  RealField x = coordinates(g, 0), y = coordinates(g, 1), z = coordinates(g, 2);
  const double sw = (rd.psi_sigma > 0.0 ? rd.psi_sigma : 0.15) * Lb;
  RealField w(g, 3);
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    const double xt = std::remainder(x.comp[0][i] - c, Lb);
    const double yt = std::remainder(y.comp[0][i] - c, Lb);
    const double zt = std::remainder(z.comp[0][i] - c, Lb);
    const double env = wrapped_gauss(xt, sw, Lb) * wrapped_gauss(yt, sw, Lb) *
                       wrapped_gauss(zt, sw, Lb);
    w.comp[0][i] = xt * env;
    w.comp[1][i] = yt * env;
    w.comp[2][i] = -2.0 * zt * env;
  }
  SpectralField W = leray_P(band_limit(fft_forward(w), rd.band_limit));
  RealField psi = envelope(g, rd.psi_sigma);
  RealField wr = fft_inverse(W);
  RealField pw(g, 3);
  for (int cc = 0; cc < 3; ++cc)
    for (std::size_t i = 0; i < g->real_size(); ++i)
      pw.comp[cc][i] = psi.comp[0][i] * wr.comp[cc][i];
  return band_limit(curl(dealias(fft_forward(pw))), rd.band_limit);
}

}  // namespace

ReconnectionFields build_reconnection_data(const ReconnectionData& rd, GridPtr g,
                                           const PhysicalParams& p) {
  if (g->dim() != 3) throw std::invalid_argument("build_reconnection_data: 3-D grid required");
  if (!(rd.M >= 0.0) || !(rd.T > 0.0) || rd.epsilon < 0.0 || rd.epsilon >= 1.0)
    throw std::invalid_argument("build_reconnection_data: invalid M, T or epsilon");

  ReconnectionFields out;

  // core: M curl(phi B_N)
  SpectralField BN = abc_beltrami(rd.beltrami, g);
  RealField phi = envelope(g, rd.phi_sigma);
  RealField bn = fft_inverse(BN);
  RealField phibn(g, 3);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < g->real_size(); ++i)
      phibn.comp[c][i] = phi.comp[0][i] * bn.comp[c][i];
  out.V0 = curl(dealias(fft_forward(phibn)));
  out.V0 *= rd.M;

  // perturbation curl(psi W), band limited so the backward factor is finite
  if (rd.perturbation == "saddle") {
    out.perturbation_curl = band_limit(saddle_field(g), std::max(rd.band_limit, 1));
    // W = (-Lap)^{-1} curl G reproduces G under curl and is the exposed
    // perturbing potential (psi == 1)
    SpectralField cg = curl(out.perturbation_curl);
    out.W = SpectralField(g, 3);
    const auto& k2 = g->k2();
    for (int c = 0; c < 3; ++c)
      for (std::size_t i = 0; i < g->spectral_size(); ++i)
        if (k2[i] > 0.0) out.W.at(c, i) = cg.at(c, i) / k2[i];
  } else if (rd.perturbation == "gaussian-linear") {
    out.perturbation_curl = gaussian_linear_curl(g, rd);
    out.W = SpectralField(g, 3);  // the enveloped-linear W is internal here
  } else {
    throw std::invalid_argument("build_reconnection_data: unknown perturbation recipe");
  }

  out.B0 = out.V0;
  if (rd.epsilon > 0.0) {
    SpectralField pert = diffusion_semigroup(out.perturbation_curl, p.eta, -rd.T);
    pert *= rd.epsilon;
    out.B0 += pert;
  }
  const double guidance = std::pow(static_cast<double>(rd.beltrami.N), -4.0);  // r = 3
  out.epsilon_warning = rd.epsilon > guidance;
  return out;
}

}  // namespace smhd
