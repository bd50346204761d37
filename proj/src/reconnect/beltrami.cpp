#include "reconnect/beltrami.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

SpectralField abc_beltrami(const BeltramiSpec& spec, GridPtr g) {
  if (g->dim() != 3) throw std::invalid_argument("abc_beltrami: 3-D grid required");
  if (spec.N < 1 || spec.N > g->n() / 3)
    throw std::invalid_argument("abc_beltrami: N beyond the resolvable band");
  if (std::abs(g->L() - 2.0 * M_PI) > 1e-12)
    throw std::invalid_argument("abc_beltrami: requires the L = 2 pi box");
  RealField x = coordinates(g, 0), y = coordinates(g, 1), z = coordinates(g, 2);
  RealField f(g, 3);
  const double N = spec.N;
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    const double sx = std::sin(N * x.comp[0][i]), cx = std::cos(N * x.comp[0][i]);
    const double sy = std::sin(N * y.comp[0][i]), cy = std::cos(N * y.comp[0][i]);
    const double sz = std::sin(N * z.comp[0][i]), cz = std::cos(N * z.comp[0][i]);
    f.comp[0][i] = spec.A * sz + spec.C * cy;
    f.comp[1][i] = spec.B * sx + spec.A * cz;
    f.comp[2][i] = spec.C * sy + spec.B * cx;
  }
  return fft_forward(f);
}

double beltrami_residual(const SpectralField& B, int N) {
  SpectralField c = curl(B);
  SpectralField scaled = B;
  scaled *= static_cast<double>(N);
  c -= scaled;
  const double nb = l2_norm(B);
  return nb > 0.0 ? l2_norm(c) / nb : 0.0;
}

}  // namespace smhd
