#pragma once

#include "besov/norms.hpp"

namespace smhd {

// Numerical verifiers for the functional inequalities used by the analysis.
// Each returns the ratio of the left-hand side to the right-hand side, so a
// valid inequality with constant C reports values bounded by C uniformly
// over bands and samples. Only the Peetre K-functional bound carries a
// pinned constant (4); every other constant is profile dependent and is
// checked for uniform boundedness, not a specific value.

struct BernsteinRatios {
  double forward = 0.0;  // ||grad^k D_j f||_q / (2^{j(k+d(1/p-1/q))} ||D_j f||_p)
  double reverse = 0.0;  // 2^j ||D_j f||_p / ||grad D_j f||_p
};

// f must be band-limited to band j (as produced by dyadic_block); q >= p.
// grad^k is realized as the radial multiplier |k|^order (identical to the
// mixed-derivative tensor norm for p = 2).
BernsteinRatios check_bernstein(const SpectralField& f_band, const DyadicPartition& part,
                                int j, int order, double p, double q);

// ||g h||_{B^{s1+s2-d/2}_{2,1}} / (||g||_{B^{s1}_{2,1}} ||h||_{B^{s2}_{2,1}}),
// requires s1, s2 <= d/2 and s1 + s2 > 0.
double check_product_law(const SpectralField& g, const SpectralField& h, double s1, double s2,
                         const DyadicPartition& part);

// ||f||_{B^{d/2}_{2,1}} / (||f||^{1/2}_{B^{d/2-1}_{2,1}} ||Lap f||^{1/2}_{B^{d/2-1}_{2,1}}).
double check_interpolation(const SpectralField& f, const DyadicPartition& part);

// ||f||_{B^{1/2}_{2,1}} / (4 ||f||_{L^2}^{1/2} ||f||_{H^1}^{1/2}); must be <= 1.
double check_k_functional(const SpectralField& f, const DyadicPartition& part);

// ||f||_{L^inf} / ||f||_{B^{d/2}_{2,1}} (embedding constant).
double check_embedding(const SpectralField& f, const DyadicPartition& part);

}  // namespace smhd
