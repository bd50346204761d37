#include "mhd/state.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

DifferenceState difference_state(const CompressibleState& comp, const IncompressibleState& incomp) {
  if (!comp.a.grid().same_as(incomp.V.grid()))
    throw std::invalid_argument("difference_state: grid mismatch");
  if (std::abs(comp.time - incomp.time) > 1e-12 * std::max(1.0, std::abs(comp.time)))
    throw std::invalid_argument("difference_state: time mismatch");
  DifferenceState d;
  d.time = comp.time;
  d.a = comp.a;
  d.u = comp.v - incomp.V;
  d.h = comp.b - incomp.B;
  return d;
}

double relative_divergence(const SpectralField& w) {
  const double nw = l2_norm(w);
  if (nw == 0.0) return 0.0;
  return l2_norm(divergence(w)) / nw;
}

}  // namespace smhd
