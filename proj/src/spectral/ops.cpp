#include "spectral/ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smhd {

namespace {
constexpr Complex kI{0.0, 1.0};

void check_vector(const SpectralField& v, const char* what) {
  if (v.ncomp() != v.grid().dim())
    throw std::invalid_argument(std::string(what) + ": expected a vector field");
}
}  // namespace

double mean(const SpectralField& f, int c) {
  return f.at(c, 0).real() / static_cast<double>(f.grid().real_size());
}

double l2_norm(const SpectralField& f) {
  const Grid& g = f.grid();
  const auto& w = g.parseval_weight();
  const double nd = static_cast<double>(g.real_size());
  double s = 0.0;
  for (int c = 0; c < f.ncomp(); ++c) {
    const auto& a = f.comp(c);
    for (std::size_t i = 0; i < a.size(); ++i) s += w[i] * std::norm(a[i]);
  }
  return std::sqrt(std::pow(g.L(), g.dim()) / (nd * nd) * s);
}

double lp_norm(const RealField& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) return linf_norm(f);
  const double vol = f.grid->cell_volume();
  double s = 0.0;
  for (const auto& c : f.comp)
    for (double v : c) s += std::pow(std::abs(v), p);
  return std::pow(vol * s, 1.0 / p);
}

double l2_norm(const RealField& f) {
  const double vol = f.grid->cell_volume();
  double s = 0.0;
  for (const auto& c : f.comp)
    for (double v : c) s += v * v;
  return std::sqrt(vol * s);
}

double linf_norm(const RealField& f) {
  double m = 0.0;
  for (const auto& c : f.comp)
    for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

SpectralField gradient(const SpectralField& f) {
  if (!f.is_scalar()) throw std::invalid_argument("gradient: expected a scalar field");
  const Grid& g = f.grid();
  SpectralField out(f.grid_ptr(), g.dim());
  for (int d = 0; d < g.dim(); ++d) {
    const auto& kd = g.k(d);
    for (std::size_t i = 0; i < g.spectral_size(); ++i)
      out.at(d, i) = kI * kd[i] * f.at(0, i);
  }
  return out;
}

SpectralField divergence(const SpectralField& v) {
  check_vector(v, "divergence");
  const Grid& g = v.grid();
  SpectralField out(v.grid_ptr(), 1);
  for (int d = 0; d < g.dim(); ++d) {
    const auto& kd = g.k(d);
    for (std::size_t i = 0; i < g.spectral_size(); ++i)
      out.at(0, i) += kI * kd[i] * v.at(d, i);
  }
  return out;
}

SpectralField curl(const SpectralField& v) {
  check_vector(v, "curl");
  const Grid& g = v.grid();
  const std::size_t ns = g.spectral_size();
  if (g.dim() == 2) {
    SpectralField out(v.grid_ptr(), 1);
    const auto& kx = g.k(0);
    const auto& ky = g.k(1);
    for (std::size_t i = 0; i < ns; ++i)
      out.at(0, i) = kI * (kx[i] * v.at(1, i) - ky[i] * v.at(0, i));
    return out;
  }
  SpectralField out(v.grid_ptr(), 3);
  const auto& kx = g.k(0);
  const auto& ky = g.k(1);
  const auto& kz = g.k(2);
  for (std::size_t i = 0; i < ns; ++i) {
    out.at(0, i) = kI * (ky[i] * v.at(2, i) - kz[i] * v.at(1, i));
    out.at(1, i) = kI * (kz[i] * v.at(0, i) - kx[i] * v.at(2, i));
    out.at(2, i) = kI * (kx[i] * v.at(1, i) - ky[i] * v.at(0, i));
  }
  return out;
}

SpectralField curl2d_scalar(const SpectralField& e) {
  if (e.grid().dim() != 2 || !e.is_scalar())
    throw std::invalid_argument("curl2d_scalar: expected a 2-D scalar field");
  const Grid& g = e.grid();
  SpectralField out(e.grid_ptr(), 2);
  const auto& kx = g.k(0);
  const auto& ky = g.k(1);
  for (std::size_t i = 0; i < g.spectral_size(); ++i) {
    out.at(0, i) = kI * ky[i] * e.at(0, i);
    out.at(1, i) = -kI * kx[i] * e.at(0, i);
  }
  return out;
}

SpectralField laplacian(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out = f;
  const auto& k2 = g.k2();
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < g.spectral_size(); ++i) out.at(c, i) *= -k2[i];
  return out;
}

SpectralField leray_Q(const SpectralField& v) {
  check_vector(v, "leray_Q");
  const Grid& g = v.grid();
  SpectralField out(v.grid_ptr(), g.dim());
  const auto& k2 = g.k2();
  for (std::size_t i = 0; i < g.spectral_size(); ++i) {
    if (k2[i] == 0.0) continue;  // zero mode belongs to P
    Complex kdotv{0.0, 0.0};
    for (int d = 0; d < g.dim(); ++d) kdotv += g.k(d)[i] * v.at(d, i);
    const Complex f = kdotv / k2[i];
    for (int d = 0; d < g.dim(); ++d) out.at(d, i) = g.k(d)[i] * f;
  }
  return out;
}

SpectralField leray_P(const SpectralField& v) {
  SpectralField out = v;
  out -= leray_Q(v);
  return out;
}

SpectralField diffusion_semigroup(const SpectralField& f, double kappa, double t) {
  const Grid& g = f.grid();
  const double kt = kappa * t;
  SpectralField out = f;
  const auto& k2 = g.k2();
  if (kt >= 0.0) {
    for (int c = 0; c < f.ncomp(); ++c)
      for (std::size_t i = 0; i < g.spectral_size(); ++i)
        out.at(c, i) *= std::exp(-kt * k2[i]);
    return out;
  }
  // Backward factor: only valid on band-limited input (unbounded
  // amplification otherwise). Everything above the cutoff is required to be
  // at roundoff level and is zeroed before amplification.
  const auto& mask = g.dealias_mask();
  const auto& w = g.parseval_weight();
  double in_band = 0.0, out_band = 0.0;
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < g.spectral_size(); ++i)
      (mask[i] ? in_band : out_band) += w[i] * std::norm(f.at(c, i));
  if (out_band > 1e-20 * std::max(in_band, 1e-300))
    throw std::domain_error("diffusion_semigroup: backward factor on a field with energy above the dealiasing cutoff");
  // roundoff hygiene: coefficients at transform-noise level must not be
  // amplified into dominant garbage
  double peak = 0.0;
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < g.spectral_size(); ++i)
      peak = std::max(peak, std::abs(f.at(c, i)));
  const double dust = 1e-13 * peak;
  for (int c = 0; c < f.ncomp(); ++c) {
    for (std::size_t i = 0; i < g.spectral_size(); ++i) {
      if (!mask[i] || std::abs(f.at(c, i)) <= dust) {
        out.at(c, i) = Complex{0.0, 0.0};
        continue;
      }
      const double expo = -kt * k2[i];
      if (expo > 700.0)
        throw std::domain_error("diffusion_semigroup: backward factor overflow");
      out.at(c, i) *= std::exp(expo);
    }
  }
  return out;
}

InvLapGradResult inverse_laplacian_gradient(const SpectralField& a) {
  if (!a.is_scalar())
    throw std::invalid_argument("inverse_laplacian_gradient: expected a scalar field");
  const Grid& g = a.grid();
  InvLapGradResult r{SpectralField(a.grid_ptr(), g.dim()), false};
  if (std::abs(a.at(0, 0)) > 1e-13 * static_cast<double>(g.real_size()))
    r.nonzero_mean_projected = true;
  const auto& k2 = g.k2();
  for (std::size_t i = 1; i < g.spectral_size(); ++i) {
    if (k2[i] == 0.0) continue;
    const Complex f = -kI * a.at(0, i) / k2[i];
    for (int d = 0; d < g.dim(); ++d) r.field.at(d, i) = g.k(d)[i] * f;
  }
  return r;
}

SpectralField dealias(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out = f;
  const auto& mask = g.dealias_mask();
  for (int c = 0; c < f.ncomp(); ++c)
    for (std::size_t i = 0; i < g.spectral_size(); ++i)
      if (!mask[i]) out.at(c, i) = Complex{0.0, 0.0};
  return out;
}

RealField coordinates(GridPtr g, int axis) {
  RealField f(g, 1);
  const int n = g->n();
  const double dx = g->dx();
  for (std::size_t i = 0; i < g->real_size(); ++i) {
    std::size_t rem = i;
    int idx[3] = {0, 0, 0};
    for (int a = g->dim() - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rem % n);
      rem /= n;
    }
    f.comp[0][i] = idx[axis] * dx;
  }
  return f;
}

SpectralField multiply(const SpectralField& a, const SpectralField& b) {
  if (!a.is_scalar() || !b.is_scalar())
    throw std::invalid_argument("multiply: expected scalar fields");
  if (!a.grid().same_as(b.grid())) throw std::invalid_argument("multiply: grid mismatch");
  RealField ar = fft_inverse(a);
  RealField br = fft_inverse(b);
  return product_to_spectral(a.grid_ptr(), ar.comp[0], br.comp[0]);
}

SpectralField product_to_spectral(GridPtr g, const std::vector<double>& a,
                                  const std::vector<double>& b) {
  std::vector<double> prod(g->real_size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a[i] * b[i];
  SpectralField out(g, 1);
  fft::forward(g->dim(), g->n(), prod.data(), out.comp(0).data());
  const auto& mask = g->dealias_mask();
  for (std::size_t i = 0; i < g->spectral_size(); ++i)
    if (!mask[i]) out.at(0, i) = Complex{0.0, 0.0};
  return out;
}

}  // namespace smhd
