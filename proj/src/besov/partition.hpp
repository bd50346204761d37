#pragma once

#include <vector>

#include "spectral/field.hpp"
#include "spectral/ops.hpp"

namespace smhd {

// Homogeneous Littlewood-Paley machinery on the grid. The radial cutoff
// chi is a fixed quintic-smoothstep bump, identically 1 on |xi| <= 3/4 and 0
// on |xi| >= 4/3; phi(xi) = chi(xi/2) - chi(xi) is supported in the annulus
// 3/4 <= |xi| <= 8/3. Partial sums telescope, so the partition of unity
// holds exactly (to roundoff) on every covered nonzero wavenumber.
class DyadicPartition {
 public:
  // Validates that [j_min, j_max] covers all retained nonzero wavenumbers;
  // throws naming the uncovered |k| range otherwise.
  DyadicPartition(GridPtr grid, int j_min, int j_max);

  // Band range derived from the grid: covers every nonzero mode of the full
  // grid, so no out-of-range energy residual can occur.
  static DyadicPartition derive(GridPtr grid);

  static double chi(double r);
  static double phi(double r) { return chi(0.5 * r) - chi(r); }

  const Grid& grid() const { return *grid_; }
  GridPtr grid_ptr() const { return grid_; }
  int j_min() const { return j_min_; }
  int j_max() const { return j_max_; }
  bool in_range(int j) const { return j >= j_min_ && j <= j_max_; }

  // phi(|k|/2^j) per flattened spectral index.
  const std::vector<double>& band_weight(int j) const;
  // chi(|k|/2^j) per flattened spectral index (defined for j in
  // [j_min-1, j_max+2]).
  const std::vector<double>& low_weight(int j) const;

  // max over retained nonzero wavenumbers of |sum_j phi(2^{-j}|k|) - 1|.
  double partition_defect() const;

 private:
  GridPtr grid_;
  int j_min_, j_max_;
  std::vector<std::vector<double>> band_w_;  // [j - j_min]
  std::vector<std::vector<double>> low_w_;   // [j - (j_min-1)]
};

// Delta_j f: exact Fourier multiplier phi(|k|/2^j).
SpectralField dyadic_block(const SpectralField& f, const DyadicPartition& part, int j);
// S_j f: chi(|k|/2^j); includes the k = 0 mode (chi(0) = 1).
SpectralField low_cutoff(const SpectralField& f, const DyadicPartition& part, int j);

// All bands of f plus the residual low part S_{j_min} f.
struct BandDecomposition {
  const DyadicPartition* partition = nullptr;
  std::vector<SpectralField> bands;  // Delta_j f, j = j_min..j_max
  SpectralField residual_low;        // S_{j_min} f

  SpectralField reconstruct() const;
};
BandDecomposition decompose(const SpectralField& f, const DyadicPartition& part);

// L2 mass of f that no band or residual sees (zero for derived partitions).
double coverage_residual_l2(const SpectralField& f, const DyadicPartition& part);

}  // namespace smhd
