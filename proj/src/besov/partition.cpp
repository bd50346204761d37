#include "besov/partition.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace smhd {

namespace {
double smoothstep5(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

SpectralField apply_weights(const SpectralField& f, const std::vector<double>& w) {
  SpectralField out = f;
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < w.size(); ++i) out.at(c, i) *= w[i];
  return out;
}
}  // namespace

double DyadicPartition::chi(double r) {
  return 1.0 - smoothstep5((r - 0.75) / (4.0 / 3.0 - 0.75));
}

DyadicPartition::DyadicPartition(GridPtr grid, int j_min, int j_max)
    : grid_(std::move(grid)), j_min_(j_min), j_max_(j_max) {
  if (j_min_ > j_max_) throw std::invalid_argument("DyadicPartition: empty band range");
  // Coverage: chi(2^{-j_min}|k|) must vanish at the smallest retained |k|
  // and chi(2^{-(j_max+1)}|k|) must be 1 at the largest retained |k|.
  const double kmin = grid_->k_min();
  const double kmax = grid_->k_max_dealiased();
  const bool low_ok = std::pow(2.0, j_min_) <= 0.75 * kmin + 1e-12;
  const bool high_ok = std::pow(2.0, j_max_) >= (2.0 / 3.0) * kmax - 1e-12;
  if (!low_ok || !high_ok) {
    std::ostringstream os;
    os << "DyadicPartition: bands [" << j_min_ << "," << j_max_
       << "] leave wavenumbers uncovered:";
    if (!low_ok) os << " |k| in [" << kmin << ", " << std::pow(2.0, j_min_) / 0.75 << ")";
    if (!high_ok) os << " |k| in (" << 1.5 * std::pow(2.0, j_max_) << ", " << kmax << "]";
    throw std::invalid_argument(os.str());
  }

  const std::size_t ns = grid_->spectral_size();
  const auto& k2 = grid_->k2();
  band_w_.resize(static_cast<std::size_t>(j_max_ - j_min_ + 1));
  for (int j = j_min_; j <= j_max_; ++j) {
    auto& w = band_w_[static_cast<std::size_t>(j - j_min_)];
    w.resize(ns);
    const double scale = std::pow(2.0, -j);
    for (std::size_t i = 0; i < ns; ++i) w[i] = phi(scale * std::sqrt(k2[i]));
  }
  low_w_.resize(static_cast<std::size_t>(j_max_ + 2 - (j_min_ - 1) + 1));
  for (int j = j_min_ - 1; j <= j_max_ + 2; ++j) {
    auto& w = low_w_[static_cast<std::size_t>(j - (j_min_ - 1))];
    w.resize(ns);
    const double scale = std::pow(2.0, -j);
    for (std::size_t i = 0; i < ns; ++i) w[i] = chi(scale * std::sqrt(k2[i]));
  }
}

DyadicPartition DyadicPartition::derive(GridPtr grid) {
  const double kmin = grid->k_min();
  const double kmax = grid->k_max_full();
  const int j_min = static_cast<int>(std::floor(std::log2(0.75 * kmin) + 1e-12));
  const int j_max = static_cast<int>(std::ceil(std::log2((2.0 / 3.0) * kmax) - 1e-12));
  return DyadicPartition(std::move(grid), j_min, j_max);
}

const std::vector<double>& DyadicPartition::band_weight(int j) const {
  if (!in_range(j)) throw std::out_of_range("DyadicPartition: band index out of range");
  return band_w_[static_cast<std::size_t>(j - j_min_)];
}

const std::vector<double>& DyadicPartition::low_weight(int j) const {
  if (j < j_min_ - 1 || j > j_max_ + 2)
    throw std::out_of_range("DyadicPartition: low cutoff index out of range");
  return low_w_[static_cast<std::size_t>(j - (j_min_ - 1))];
}

double DyadicPartition::partition_defect() const {
  const auto& k2 = grid_->k2();
  const auto& mask = grid_->dealias_mask();
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_->spectral_size(); ++i) {
    if (!mask[i] || k2[i] == 0.0) continue;
    double s = 0.0;
    for (const auto& w : band_w_) s += w[i];
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

SpectralField dyadic_block(const SpectralField& f, const DyadicPartition& part, int j) {
  return apply_weights(f, part.band_weight(j));
}

SpectralField low_cutoff(const SpectralField& f, const DyadicPartition& part, int j) {
  return apply_weights(f, part.low_weight(j));
}

SpectralField BandDecomposition::reconstruct() const {
  SpectralField sum = residual_low;
  for (const auto& b : bands) sum += b;
  return sum;
}

BandDecomposition decompose(const SpectralField& f, const DyadicPartition& part) {
  BandDecomposition d;
  d.partition = &part;
  d.bands.reserve(static_cast<std::size_t>(part.j_max() - part.j_min() + 1));
  for (int j = part.j_min(); j <= part.j_max(); ++j)
    d.bands.push_back(dyadic_block(f, part, j));
  d.residual_low = low_cutoff(f, part, part.j_min());
  return d;
}

double coverage_residual_l2(const SpectralField& f, const DyadicPartition& part) {
  SpectralField covered = low_cutoff(f, part, part.j_max() + 1);
  // S_{j_max+1} = S_{j_min} + sum of bands; anything beyond it is uncovered.
  SpectralField rest = f;
  rest -= covered;
  return l2_norm(rest);
}

}  // namespace smhd
