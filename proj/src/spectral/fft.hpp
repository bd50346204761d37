#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace smhd {

// Thin wrapper around FFTW r2c/c2r transforms on [0,L)^dim grids with n
// points per dimension. Forward transforms are unnormalized; the inverse
// carries the 1/n^dim factor. Plans are cached per (dim, n) and executions
// are reentrant, so concurrent transforms from different threads are safe.
namespace fft {

// Number of complex coefficients in the half-spectrum layout.
std::size_t spectral_size(int dim, int n);
// Number of real samples.
std::size_t real_size(int dim, int n);

// real (n^dim, row-major) -> complex half spectrum (last axis n/2+1).
void forward(int dim, int n, const double* in, std::complex<double>* out);
// complex half spectrum -> real; input is left untouched (internal copy).
void inverse(int dim, int n, const std::complex<double>* in, double* out);

}  // namespace fft
}  // namespace smhd
