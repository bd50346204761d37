#pragma once

#include <limits>
#include <vector>

#include "besov/partition.hpp"

namespace smhd {

struct BesovIndex {
  double s = 0.0;
  double p = 2.0;
  double r = 1.0;
};

// Homogeneous Besov norm (sum_j 2^{rjs} ||Delta_j f||_p^r)^{1/r} over the
// partition's band range; the zero mode is excluded. Vector fields use the
// pointwise Euclidean magnitude inside the per-band L^p norm. p = 2 is
// evaluated spectrally (Parseval), other p by grid quadrature.
double besov_norm(const SpectralField& f, const BesovIndex& idx, const DyadicPartition& part);

// ||Delta_j f||_{L^p} for each band j in range.
std::vector<double> band_lp_norms(const SpectralField& f, double p, const DyadicPartition& part);

// Homogeneous Sobolev seminorm ||f||_{H^s} = || |k|^s f_hat ||_{L^2}.
double sobolev_norm(const SpectralField& f, double s);

// sum_j 2^{js} || |k|^kpow Delta_j f ||_{L^2}: the Besov norm of the radial
// derivative multiplier |k|^kpow applied to f (equals the norm of grad f for
// kpow = 1 and of the Hessian for kpow = 2 at p = 2).
double besov_kpow_norm(const SpectralField& f, double s, double kpow, const DyadicPartition& part);

// Low/high split at threshold 2^j * nu <= 1 (low). The zero mode belongs to
// neither part; f_low + f_high + mean = f.
struct LowHighSplit {
  SpectralField low;
  SpectralField high;
};
LowHighSplit low_high_split(const SpectralField& f, double nu, const DyadicPartition& part);

// Chemin-Lerner norm sum_j 2^{js} ||Delta_j f||_{L^{r_t}((0,T); L^p)} on a
// uniformly sampled time series; time integrals by trapezoid, r_t = inf as
// the max over samples.
double chemin_lerner_norm(const std::vector<SpectralField>& series, double dt_sample,
                          const BesovIndex& idx, double r_t, const DyadicPartition& part);

// Plain time-integrated Besov norm (L^{r_t} in time of the Besov norm),
// same quadrature; by Minkowski it bounds chemin_lerner_norm from below.
double time_lr_besov_norm(const std::vector<SpectralField>& series, double dt_sample,
                          const BesovIndex& idx, double r_t, const DyadicPartition& part);

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace smhd
