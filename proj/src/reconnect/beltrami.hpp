#pragma once

#include "spectral/ops.hpp"

namespace smhd {

// ABC Beltrami field with frequency N: curl B_N = N B_N, div B_N = 0.
struct BeltramiSpec {
  double A = 1.0;
  double B = 0.1;
  double C = 0.1;
  int N = 2;
};

// (A sin(Nz) + C cos(Ny), B sin(Nx) + A cos(Nz), C sin(Ny) + B cos(Nx)) on a
// 3-D grid with L = 2 pi (the frequency must be a resolvable integer mode,
// N <= n/3). Throws when N is beyond the retained band.
SpectralField abc_beltrami(const BeltramiSpec& spec, GridPtr g);

// ||curl B - N B|| / ||B||: the curl-eigenfield residual.
double beltrami_residual(const SpectralField& B, int N);

}  // namespace smhd
