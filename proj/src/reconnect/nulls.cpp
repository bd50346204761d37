#include "reconnect/nulls.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace smhd {

namespace {
double periodic_dist(const std::array<double, 3>& a, const std::array<double, 3>& b, double L) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double d = std::remainder(a[i] - b[i], L);
    s += d * d;
  }
  return std::sqrt(s);
}
}  // namespace

std::vector<NullPoint> find_nulls(const SpectralField& b, const NullSearchOptions& opt) {
  if (b.grid().dim() != 3 || b.ncomp() != 3)
    throw std::invalid_argument("find_nulls: 3-D vector field required");
  const Grid& g = b.grid();
  const int n = g.n();
  const double L = g.L();
  const double h = g.dx();

  FieldEvaluator eval(b, FieldEvaluator::Method::Spectral);
  const double bmax = eval.max_magnitude();
  if (bmax == 0.0) return {};
  const double grad_max = eval.max_gradient();

  // magnitude on the grid for the coarse scan
  RealField r = fft_inverse(b);
  std::vector<double> mag(g.real_size());
  for (std::size_t i = 0; i < g.real_size(); ++i) {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) s += r.comp[c][i] * r.comp[c][i];
    mag[i] = std::sqrt(s);
  }
  auto at = [&](int i, int j, int k) {
    i = (i % n + n) % n;
    j = (j % n + n) % n;
    k = (k % n + n) % n;
    return mag[(static_cast<std::size_t>(i) * n + j) * n + k];
  };

  std::vector<std::array<double, 3>> seeds;
  const int stride = std::max(1, opt.coarse_stride);
  for (int i = 0; i < n && static_cast<int>(seeds.size()) < opt.max_seeds; i += stride)
    for (int j = 0; j < n && static_cast<int>(seeds.size()) < opt.max_seeds; j += stride)
      for (int k = 0; k < n && static_cast<int>(seeds.size()) < opt.max_seeds; k += stride) {
        const double m0 = at(i, j, k);
        if (m0 >= opt.seed_threshold * bmax) continue;
        if (m0 > at(i - 1, j, k) || m0 > at(i + 1, j, k) || m0 > at(i, j - 1, k) ||
            m0 > at(i, j + 1, k) || m0 > at(i, j, k - 1) || m0 > at(i, j, k + 1))
          continue;
        seeds.push_back({i * h, j * h, k * h});
      }

  std::vector<NullPoint> nulls;
  for (const auto& seed : seeds) {
    std::array<double, 3> x = seed;
    double val[3], jac[9];
    bool converged = false;
    for (int it = 0; it < opt.max_newton_iters; ++it) {
      eval.value_and_jacobian(x, val, jac);
      const double bn = std::sqrt(val[0] * val[0] + val[1] * val[1] + val[2] * val[2]);
      if (bn < opt.newton_tol * bmax) {
        converged = true;
        break;
      }
      Eigen::Matrix3d J;
      Eigen::Vector3d f;
      for (int a = 0; a < 3; ++a) {
        f(a) = val[a];
        for (int c = 0; c < 3; ++c) J(a, c) = jac[a * 3 + c];
      }
      Eigen::FullPivLU<Eigen::Matrix3d> lu(J);
      if (!lu.isInvertible()) break;
      Eigen::Vector3d dx = lu.solve(-f);
      if (dx.norm() > 0.25 * L) break;  // escaped the basin
      for (int a = 0; a < 3; ++a) {
        x[a] += dx(a);
        x[a] -= L * std::floor(x[a] / L);
      }
    }
    if (!converged) continue;
    bool duplicate = false;
    for (const auto& q : nulls)
      if (periodic_dist(x, q.location, L) < h) {
        duplicate = true;
        break;
      }
    if (duplicate) continue;

    NullPoint np;
    np.location = x;
    eval.value_and_jacobian(x, val, jac);
    np.field_magnitude = std::sqrt(val[0] * val[0] + val[1] * val[1] + val[2] * val[2]);
    Eigen::Matrix3d J;
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) {
        J(a, c) = jac[a * 3 + c];
        np.jacobian[a][c] = jac[a * 3 + c];
      }
    Eigen::EigenSolver<Eigen::Matrix3d> es(J, false);
    double min_re = 1e300;
    for (int a = 0; a < 3; ++a) {
      np.eigenvalues[a] = es.eigenvalues()(a);
      min_re = std::min(min_re, std::abs(np.eigenvalues[a].real()));
    }
    np.hyperbolic = min_re > opt.classification_margin * grad_max;
    nulls.push_back(np);
  }
  return nulls;
}

int hyperbolic_count(const std::vector<NullPoint>& nulls) {
  int c = 0;
  for (const auto& np : nulls)
    if (np.hyperbolic) ++c;
  return c;
}

}  // namespace smhd
