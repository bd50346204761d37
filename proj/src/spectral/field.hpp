#pragma once

#include <complex>
#include <vector>

#include "spectral/grid.hpp"

namespace smhd {

using Complex = std::complex<double>;

// Real-space mirror of a field: one contiguous row-major array per component.
struct RealField {
  GridPtr grid;
  std::vector<std::vector<double>> comp;

  RealField() = default;
  RealField(GridPtr g, int ncomp)
      : grid(std::move(g)), comp(ncomp, std::vector<double>(grid->real_size(), 0.0)) {}
  int ncomp() const { return static_cast<int>(comp.size()); }
};

// Scalar or vector field stored as complex Fourier coefficients (FFTW half
// spectrum). Coefficients of fields built from real data satisfy the
// conjugate symmetry of a real-valued field by construction.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(GridPtr g, int ncomp)
      : grid_(std::move(g)),
        comp_(ncomp, std::vector<Complex>(grid_->spectral_size(), Complex{0.0, 0.0})) {}

  const Grid& grid() const { return *grid_; }
  GridPtr grid_ptr() const { return grid_; }
  int ncomp() const { return static_cast<int>(comp_.size()); }
  bool is_scalar() const { return ncomp() == 1; }

  std::vector<Complex>& comp(int c) { return comp_[c]; }
  const std::vector<Complex>& comp(int c) const { return comp_[c]; }
  Complex& at(int c, std::size_t i) { return comp_[c][i]; }
  const Complex& at(int c, std::size_t i) const { return comp_[c][i]; }

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double s);

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  GridPtr grid_;
  std::vector<std::vector<Complex>> comp_;
};

SpectralField fft_forward(const RealField& f);
RealField fft_inverse(const SpectralField& F);

// Single-component helpers.
SpectralField fft_forward_scalar(GridPtr g, const std::vector<double>& data);

}  // namespace smhd
