#include "spectral/random.hpp"

#include <cmath>

#include "spectral/ops.hpp"

namespace smhd {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * M_PI * u2);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

SpectralField random_scalar(GridPtr g, Rng& rng, double decay) {
  RealField noise(g, 1);
  for (auto& v : noise.comp[0]) v = rng.normal();
  SpectralField F = fft_forward(noise);
  const auto& k2 = g->k2();
  for (std::size_t i = 0; i < g->spectral_size(); ++i)
    F.at(0, i) *= std::pow(1.0 + std::sqrt(k2[i]), -decay);
  F.at(0, 0) = Complex{0.0, 0.0};
  return dealias(F);
}

SpectralField random_solenoidal(GridPtr g, Rng& rng, double decay) {
  SpectralField v(g, g->dim());
  for (int c = 0; c < g->dim(); ++c) {
    SpectralField s = random_scalar(g, rng, decay);
    v.comp(c) = s.comp(0);
  }
  return leray_P(v);
}

}  // namespace smhd
