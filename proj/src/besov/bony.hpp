#pragma once

#include "besov/partition.hpp"

namespace smhd {

// Bony decomposition of a product of scalar fields:
//   T_g h = sum_j S_{j-1} g . Delta_j h
//   R(g,h) = sum_{|k-j|<=1} Delta_k g . Delta_j h
// With S including the zero mode, T_g h + T_h g + R(g,h) reconstructs
// g*h - mean(g)*mean(h) (the homogeneous pieces of the product). Products
// are pseudo-spectral; with `use_dealias` both the pieces and the reference
// product must be dealiased consistently, without it the reconstruction is
// a pointwise identity on the grid.
SpectralField bony_paraproduct(const SpectralField& g, const SpectralField& h,
                               const DyadicPartition& part, bool use_dealias = true);
SpectralField bony_remainder(const SpectralField& g, const SpectralField& h,
                             const DyadicPartition& part, bool use_dealias = true);

}  // namespace smhd
