#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <vector>

#include "spectral/fft.hpp"

namespace smhd {

// Periodic box [0, L)^dim sampled with n points per dimension (n a power of
// two, n >= 8). Wavenumbers are k = (2*pi/L) * m with integer m in
// [-n/2, n/2); the spectral layout is the FFTW half spectrum (last axis
// truncated to n/2+1 entries).
class Grid {
 public:
  Grid(int dim, int n, double box_length);

  int dim() const { return dim_; }
  int n() const { return n_; }
  double L() const { return L_; }
  double dx() const { return L_ / n_; }
  double cell_volume() const { return std::pow(L_ / n_, dim_); }

  std::size_t spectral_size() const { return spec_size_; }
  std::size_t real_size() const { return real_size_; }

  // Per-index wavenumber tables (flattened half-spectrum order).
  const std::vector<double>& k(int axis) const { return kcomp_[axis]; }
  const std::vector<double>& k2() const { return k2_; }
  // Parseval weight: 2 for interior last-axis entries (conjugate pair
  // stored once), 1 otherwise.
  const std::vector<double>& parseval_weight() const { return pweight_; }
  // 2/3-rule mask: 1 where all |m_i| <= floor(n/3), else 0.
  const std::vector<unsigned char>& dealias_mask() const { return mask_; }
  // Integer mode along `axis` for flattened index `idx`.
  int mode(int axis, std::size_t idx) const;

  // Largest |k| of any retained (dealiased) mode, and of the full grid.
  double k_max_dealiased() const { return kmax_dealiased_; }
  double k_max_full() const { return kmax_full_; }
  // Smallest nonzero |k|.
  double k_min() const { return 2.0 * M_PI / L_; }

  bool same_as(const Grid& o) const {
    return dim_ == o.dim_ && n_ == o.n_ && L_ == o.L_;
  }

 private:
  int dim_;
  int n_;
  double L_;
  std::size_t spec_size_;
  std::size_t real_size_;
  std::vector<double> kcomp_[3];
  std::vector<double> k2_;
  std::vector<double> pweight_;
  std::vector<unsigned char> mask_;
  double kmax_dealiased_;
  double kmax_full_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int dim, int n, double box_length = 2.0 * M_PI);

}  // namespace smhd
