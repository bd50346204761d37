#include "besov/inequalities.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

namespace {
double radial_multiplier_lp(const SpectralField& f, double order, double p) {
  SpectralField g = f;
  const auto& k2 = f.grid().k2();
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < k2.size(); ++i)
      g.at(c, i) *= std::pow(k2[i], 0.5 * order);
  if (p == 2.0) return l2_norm(g);
  return lp_norm(fft_inverse(g), p);
}

double band_energy_outside(const SpectralField& f, const DyadicPartition& part, int j) {
  // energy on modes outside the support of phi(|k|/2^j)
  const auto& w = part.band_weight(j);
  const auto& pw = f.grid().parseval_weight();
  double out = 0.0;
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == 0.0) out += pw[i] * std::norm(f.at(c, i));
  const Grid& g = f.grid();
  const double nd = static_cast<double>(g.real_size());
  return std::sqrt(std::pow(g.L(), g.dim()) / (nd * nd) * out);
}
}  // namespace

BernsteinRatios check_bernstein(const SpectralField& f_band, const DyadicPartition& part,
                                int j, int order, double p, double q) {
  if (q < p) throw std::invalid_argument("check_bernstein: q >= p required");
  if (band_energy_outside(f_band, part, j) > 0.2 * l2_norm(f_band))
    throw std::invalid_argument("check_bernstein: field is not localized in band j");
  const Grid& g = f_band.grid();
  const double d = g.dim();
  const double denom_p = (p == 2.0) ? l2_norm(f_band) : lp_norm(fft_inverse(f_band), p);
  if (denom_p <= 0.0) throw std::invalid_argument("check_bernstein: zero field");
  BernsteinRatios r;
  const double num = radial_multiplier_lp(f_band, order, q);
  r.forward = num / (std::pow(2.0, j * (order + d * (1.0 / p - 1.0 / q))) * denom_p);
  const double grad1 = radial_multiplier_lp(f_band, 1.0, p);
  r.reverse = std::pow(2.0, j) * denom_p / grad1;
  return r;
}

double check_product_law(const SpectralField& g, const SpectralField& h, double s1, double s2,
                         const DyadicPartition& part) {
  const double d = g.grid().dim();
  if (s1 > d / 2 + 1e-12 || s2 > d / 2 + 1e-12 || s1 + s2 <= 0)
    throw std::invalid_argument("check_product_law: need s1,s2 <= d/2 and s1+s2 > 0");
  const double ng = besov_norm(g, {s1, 2.0, 1.0}, part);
  const double nh = besov_norm(h, {s2, 2.0, 1.0}, part);
  if (ng <= 0 || nh <= 0) throw std::invalid_argument("check_product_law: zero factor");
  const SpectralField gh = multiply(g, h);
  return besov_norm(gh, {s1 + s2 - d / 2, 2.0, 1.0}, part) / (ng * nh);
}

double check_interpolation(const SpectralField& f, const DyadicPartition& part) {
  const double d = f.grid().dim();
  const double mid = besov_norm(f, {d / 2, 2.0, 1.0}, part);
  const double lo = besov_norm(f, {d / 2 - 1.0, 2.0, 1.0}, part);
  const double hi = besov_norm(laplacian(f), {d / 2 - 1.0, 2.0, 1.0}, part);
  if (lo <= 0 || hi <= 0) throw std::invalid_argument("check_interpolation: zero field");
  return mid / std::sqrt(lo * hi);
}

double check_k_functional(const SpectralField& f, const DyadicPartition& part) {
  const double b = besov_norm(f, {0.5, 2.0, 1.0}, part);
  SpectralField mf = f;
  for (int c = 0; c < f.ncomp(); ++c) mf.at(c, 0) = Complex{0.0, 0.0};
  const double l2 = l2_norm(mf);
  const double h1 = sobolev_norm(f, 1.0);
  if (l2 <= 0 || h1 <= 0) throw std::invalid_argument("check_k_functional: zero field");
  return b / (4.0 * std::sqrt(l2) * std::sqrt(h1));
}

double check_embedding(const SpectralField& f, const DyadicPartition& part) {
  const double d = f.grid().dim();
  const double b = besov_norm(f, {d / 2, 2.0, 1.0}, part);
  if (b <= 0) throw std::invalid_argument("check_embedding: zero field");
  SpectralField mf = f;
  for (int c = 0; c < f.ncomp(); ++c) mf.at(c, 0) = Complex{0.0, 0.0};
  return linf_norm(fft_inverse(mf)) / b;
}

}  // namespace smhd
