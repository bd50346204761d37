#include "reconnect/eval.hpp"

#include <cmath>
#include <stdexcept>

#include "spectral/ops.hpp"

namespace smhd {

FieldEvaluator::FieldEvaluator(const SpectralField& f, Method m)
    : grid_(f.grid_ptr()), ncomp_(f.ncomp()) {
  if (grid_->dim() != 3) throw std::invalid_argument("FieldEvaluator: 3-D fields only");
  use_spectral_ = (m == Method::Spectral) || (m == Method::Auto && grid_->n() <= 48);
  coef_.resize(ncomp_);
  for (int c = 0; c < ncomp_; ++c) coef_[c] = f.comp(c);
  RealField r = fft_inverse(f);
  real_.resize(ncomp_);
  for (int c = 0; c < ncomp_; ++c) real_[c] = std::move(r.comp[c]);
  for (std::size_t i = 0; i < grid_->real_size(); ++i) {
    double s = 0.0;
    for (int c = 0; c < ncomp_; ++c) s += real_[c][i] * real_[c][i];
    max_mag_ = std::max(max_mag_, s);
  }
  max_mag_ = std::sqrt(max_mag_);
}

double FieldEvaluator::max_gradient() const {
  if (max_grad_ >= 0.0) return max_grad_;
  const Grid& g = *grid_;
  std::vector<double> acc(g.real_size(), 0.0);
  std::vector<double> tmp(g.real_size());
  std::vector<Complex> dc(g.spectral_size());
  for (int c = 0; c < ncomp_; ++c)
    for (int j = 0; j < 3; ++j) {
      const auto& kj = g.k(j);
      for (std::size_t i = 0; i < dc.size(); ++i)
        dc[i] = Complex{0.0, kj[i]} * coef_[c][i];
      fft::inverse(3, g.n(), dc.data(), tmp.data());
      for (std::size_t i = 0; i < tmp.size(); ++i) acc[i] += tmp[i] * tmp[i];
    }
  double m = 0.0;
  for (double v : acc) m = std::max(m, v);
  max_grad_ = std::sqrt(m);
  return max_grad_;
}

void FieldEvaluator::spectral_eval(const std::array<double, 3>& x, double* val,
                                   double* jac) const {
  const Grid& g = *grid_;
  const int n = g.n();
  const int half = n / 2;
  const int nlast = half + 1;
  const double k0 = 2.0 * M_PI / g.L();
  // per-axis phase tables e^{i k m x}
  std::vector<Complex> p0(n), p1(n), p2(nlast);
  std::vector<double> km(n);
  for (int i = 0; i < n; ++i) km[i] = k0 * ((i <= half) ? i : i - n);
  for (int i = 0; i < n; ++i) {
    p0[i] = std::polar(1.0, km[i] * x[0]);
    p1[i] = std::polar(1.0, km[i] * x[1]);
  }
  for (int i = 0; i < nlast; ++i) p2[i] = std::polar(1.0, k0 * i * x[2]);

  const double inv_nd = 1.0 / static_cast<double>(g.real_size());
  for (int c = 0; c < ncomp_; ++c) {
    val[c] = 0.0;
    if (jac)
      for (int j = 0; j < 3; ++j) jac[c * 3 + j] = 0.0;
  }
  std::size_t idx = 0;
  for (int i0 = 0; i0 < n; ++i0) {
    const Complex a0 = p0[i0];
    const double kx = km[i0];
    for (int i1 = 0; i1 < n; ++i1) {
      const Complex a01 = a0 * p1[i1];
      const double ky = km[i1];
      for (int i2 = 0; i2 < nlast; ++i2, ++idx) {
        const Complex ph = a01 * p2[i2];
        const double w = (i2 == 0 || i2 == half) ? 1.0 : 2.0;
        const double kz = k0 * i2;
        for (int c = 0; c < ncomp_; ++c) {
          const Complex z = coef_[c][idx] * ph;
          val[c] += w * z.real();
          if (jac) {
            // d_j picks up i k_j: Re(i k z) = -k Im(z)
            jac[c * 3 + 0] -= w * kx * z.imag();
            jac[c * 3 + 1] -= w * ky * z.imag();
            jac[c * 3 + 2] -= w * kz * z.imag();
          }
        }
      }
    }
  }
  for (int c = 0; c < ncomp_; ++c) {
    val[c] *= inv_nd;
    if (jac)
      for (int j = 0; j < 3; ++j) jac[c * 3 + j] *= inv_nd;
  }
}

namespace {
inline void catmull_rom(double t, double w[4]) {
  const double t2 = t * t, t3 = t2 * t;
  w[0] = -0.5 * t + t2 - 0.5 * t3;
  w[1] = 1.0 - 2.5 * t2 + 1.5 * t3;
  w[2] = 0.5 * t + 2.0 * t2 - 1.5 * t3;
  w[3] = -0.5 * t2 + 0.5 * t3;
}
}  // namespace

void FieldEvaluator::tricubic_eval(const std::array<double, 3>& x, double* val) const {
  const Grid& g = *grid_;
  const int n = g.n();
  const double inv_dx = 1.0 / g.dx();
  int base[3];
  double w[3][4];
  for (int a = 0; a < 3; ++a) {
    double u = x[a] * inv_dx;
    u -= n * std::floor(u / n);
    const int i0 = static_cast<int>(std::floor(u));
    catmull_rom(u - i0, w[a]);
    base[a] = i0;
  }
  int ix[4], iy[4], iz[4];
  for (int d = 0; d < 4; ++d) {
    ix[d] = (base[0] + d - 1 + n) % n;
    iy[d] = (base[1] + d - 1 + n) % n;
    iz[d] = (base[2] + d - 1 + n) % n;
  }
  for (int c = 0; c < ncomp_; ++c) {
    double acc = 0.0;
    const auto& data = real_[c];
    for (int a = 0; a < 4; ++a) {
      const std::size_t offa = static_cast<std::size_t>(ix[a]) * n;
      double accy = 0.0;
      for (int b = 0; b < 4; ++b) {
        const std::size_t offb = (offa + iy[b]) * n;
        double accz = 0.0;
        for (int d = 0; d < 4; ++d) accz += w[2][d] * data[offb + iz[d]];
        accy += w[1][b] * accz;
      }
      acc += w[0][a] * accy;
    }
    val[c] = acc;
  }
}

void FieldEvaluator::value(const std::array<double, 3>& x, double* out) const {
  if (use_spectral_)
    spectral_eval(x, out, nullptr);
  else
    tricubic_eval(x, out);
}

void FieldEvaluator::value_and_jacobian(const std::array<double, 3>& x, double* val,
                                        double* jac) const {
  spectral_eval(x, val, jac);
}

}  // namespace smhd
