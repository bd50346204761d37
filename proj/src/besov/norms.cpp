#include "besov/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

namespace {

// ||w .* f||_{L^p} for a radial weight table, combining components as a
// pointwise Euclidean magnitude.
double weighted_lp(const SpectralField& f, const std::vector<double>& w, double p) {
  const Grid& g = f.grid();
  if (p == 2.0) {
    const auto& pw = g.parseval_weight();
    double s = 0.0;
    for (int c = 0; c < f.ncomp(); ++c) {
      const auto& a = f.comp(c);
      for (std::size_t i = 0; i < a.size(); ++i) s += pw[i] * w[i] * w[i] * std::norm(a[i]);
    }
    const double nd = static_cast<double>(g.real_size());
    return std::sqrt(std::pow(g.L(), g.dim()) / (nd * nd) * s);
  }
  SpectralField bf = f;
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < w.size(); ++i) bf.at(c, i) *= w[i];
  RealField r = fft_inverse(bf);
  if (f.ncomp() == 1) return lp_norm(r, p);
  RealField mag(f.grid_ptr(), 1);
  for (std::size_t i = 0; i < mag.comp[0].size(); ++i) {
    double s = 0.0;
    for (int c = 0; c < f.ncomp(); ++c) s += r.comp[c][i] * r.comp[c][i];
    mag.comp[0][i] = std::sqrt(s);
  }
  return lp_norm(mag, p);
}

void check_index(const BesovIndex& idx) {
  if (idx.p < 1.0 || idx.r < 1.0)
    throw std::invalid_argument("BesovIndex: p and r must be in [1, inf]");
}

}  // namespace

std::vector<double> band_lp_norms(const SpectralField& f, double p, const DyadicPartition& part) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(part.j_max() - part.j_min() + 1));
  for (int j = part.j_min(); j <= part.j_max(); ++j)
    out.push_back(weighted_lp(f, part.band_weight(j), p));
  return out;
}

double besov_norm(const SpectralField& f, const BesovIndex& idx, const DyadicPartition& part) {
  check_index(idx);
  const std::vector<double> bn = band_lp_norms(f, idx.p, part);
  if (std::isinf(idx.r)) {
    double m = 0.0;
    for (int j = part.j_min(); j <= part.j_max(); ++j)
      m = std::max(m, std::pow(2.0, j * idx.s) * bn[static_cast<std::size_t>(j - part.j_min())]);
    return m;
  }
  double s = 0.0;
  for (int j = part.j_min(); j <= part.j_max(); ++j)
    s += std::pow(std::pow(2.0, j * idx.s) * bn[static_cast<std::size_t>(j - part.j_min())], idx.r);
  return std::pow(s, 1.0 / idx.r);
}

double sobolev_norm(const SpectralField& f, double s) {
  const Grid& g = f.grid();
  const auto& pw = g.parseval_weight();
  const auto& k2 = g.k2();
  double acc = 0.0;
  for (int c = 0; c < f.ncomp(); ++c) {
    const auto& a = f.comp(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k2[i] == 0.0 && s != 0.0) continue;
      acc += pw[i] * std::pow(k2[i], s) * std::norm(a[i]);
    }
  }
  const double nd = static_cast<double>(g.real_size());
  return std::sqrt(std::pow(g.L(), g.dim()) / (nd * nd) * acc);
}

double besov_kpow_norm(const SpectralField& f, double s, double kpow,
                       const DyadicPartition& part) {
  const Grid& g = f.grid();
  const auto& pw = g.parseval_weight();
  const auto& k2 = g.k2();
  const double nd = static_cast<double>(g.real_size());
  const double vol = std::pow(g.L(), g.dim()) / (nd * nd);
  double total = 0.0;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    const auto& w = part.band_weight(j);
    double acc = 0.0;
    for (int c = 0; c < f.ncomp(); ++c) {
      const auto& a = f.comp(c);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (w[i] == 0.0) continue;
        acc += pw[i] * w[i] * w[i] * std::pow(k2[i], kpow) * std::norm(a[i]);
      }
    }
    total += std::pow(2.0, j * s) * std::sqrt(vol * acc);
  }
  return total;
}

LowHighSplit low_high_split(const SpectralField& f, double nu, const DyadicPartition& part) {
  if (!(nu > 0.0)) throw std::invalid_argument("low_high_split: nu must be positive");
  // Bands with 2^j <= 1/nu are low; their partial sum telescopes to
  // S_{J+1} - S_{j_min} with J = floor(log2(1/nu)).
  const int J = static_cast<int>(std::floor(std::log2(1.0 / nu) + 1e-12));
  LowHighSplit out;
  SpectralField meanless = f;
  for (int c = 0; c < f.ncomp(); ++c) meanless.at(c, 0) = Complex{0.0, 0.0};
  if (J < part.j_min()) {
    out.low = SpectralField(f.grid_ptr(), f.ncomp());
    out.high = meanless;
    return out;
  }
  const int Jc = std::min(J, part.j_max());
  out.low = low_cutoff(f, part, Jc + 1);
  out.low -= low_cutoff(f, part, part.j_min());
  out.high = meanless;
  out.high -= out.low;
  // residual S_{j_min} f minus the mean is high-frequency-free by coverage,
  // so out.high carries exactly the bands above the threshold.
  return out;
}

double chemin_lerner_norm(const std::vector<SpectralField>& series, double dt_sample,
                          const BesovIndex& idx, double r_t, const DyadicPartition& part) {
  check_index(idx);
  if (series.empty()) throw std::invalid_argument("chemin_lerner_norm: empty series");
  const std::size_t nb = static_cast<std::size_t>(part.j_max() - part.j_min() + 1);
  std::vector<std::vector<double>> per_band(nb);
  for (const auto& f : series) {
    const auto bn = band_lp_norms(f, idx.p, part);
    for (std::size_t b = 0; b < nb; ++b) per_band[b].push_back(bn[b]);
  }
  double total = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    const auto& v = per_band[b];
    double tnorm;
    if (std::isinf(r_t)) {
      tnorm = 0.0;
      for (double x : v) tnorm = std::max(tnorm, x);
    } else {
      // trapezoid of x^{r_t}
      double acc = 0.0;
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        acc += 0.5 * dt_sample * (std::pow(v[i], r_t) + std::pow(v[i + 1], r_t));
      tnorm = std::pow(acc, 1.0 / r_t);
    }
    const int j = part.j_min() + static_cast<int>(b);
    total += std::pow(2.0, j * idx.s) * tnorm;
  }
  return total;
}

double time_lr_besov_norm(const std::vector<SpectralField>& series, double dt_sample,
                          const BesovIndex& idx, double r_t, const DyadicPartition& part) {
  if (series.empty()) throw std::invalid_argument("time_lr_besov_norm: empty series");
  std::vector<double> vals;
  vals.reserve(series.size());
  for (const auto& f : series) vals.push_back(besov_norm(f, idx, part));
  if (std::isinf(r_t)) {
    double m = 0.0;
    for (double x : vals) m = std::max(m, x);
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i)
    acc += 0.5 * dt_sample * (std::pow(vals[i], r_t) + std::pow(vals[i + 1], r_t));
  return std::pow(acc, 1.0 / r_t);
}

}  // namespace smhd
