#pragma once

#include <cstdint>

#include "spectral/field.hpp"

namespace smhd {

// Deterministic generator (splitmix64 + Box-Muller). std::random engines are
// avoided for distributions because their output is implementation-defined;
// reproducibility across toolchains is part of the harness contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Mean-free, dealiased random scalar field: white noise shaped by the
// envelope (1+|k|)^{-decay}.
SpectralField random_scalar(GridPtr g, Rng& rng, double decay);

// Divergence-free random vector field (Leray projection of component noise).
SpectralField random_solenoidal(GridPtr g, Rng& rng, double decay);

}  // namespace smhd
