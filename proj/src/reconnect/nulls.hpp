#pragma once

#include <array>
#include <complex>
#include <vector>

#include "reconnect/eval.hpp"

namespace smhd {

struct NullPoint {
  std::array<double, 3> location{};
  std::array<std::array<double, 3>, 3> jacobian{};
  std::array<std::complex<double>, 3> eigenvalues{};
  bool hyperbolic = false;
  double field_magnitude = 0.0;  // |b| at the converged location
};

struct NullSearchOptions {
  int coarse_stride = 1;        // scan every coarse_stride-th grid point
  double seed_threshold = 0.25; // seeds where |b| < threshold * max|b|
  double newton_tol = 1e-9;     // convergence: |b| < tol * max|b|
  int max_newton_iters = 50;
  int max_seeds = 512;
  // hyperbolic iff min |Re lambda| > margin * max|grad b|
  double classification_margin = 1e-3;
};

// Coarse scan for local minima of |b| below the seed threshold, Newton
// refinement on the spectrally evaluated field, duplicate merge within one
// grid cell. Deterministic for fixed options (seeds in grid order, first
// survivor kept). Non-converged seeds are dropped, never fatal.
std::vector<NullPoint> find_nulls(const SpectralField& b, const NullSearchOptions& opt = {});

int hyperbolic_count(const std::vector<NullPoint>& nulls);

}  // namespace smhd
