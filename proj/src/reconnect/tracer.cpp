#include "reconnect/tracer.hpp"

#include <cmath>

namespace smhd {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 add(const Vec3& a, const Vec3& b, double s) {
  return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
}

double norm(const Vec3& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

Vec3 wrap(Vec3 x, double L) {
  for (int i = 0; i < 3; ++i) x[i] -= L * std::floor(x[i] / L);
  return x;
}

// Cash-Karp tableau
constexpr double kA[6][5] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {3.0 / 10, -9.0 / 10, 6.0 / 5},
    {-11.0 / 54, 5.0 / 2, -70.0 / 27, 35.0 / 27},
    {1631.0 / 55296, 175.0 / 512, 575.0 / 13824, 44275.0 / 110592, 253.0 / 4096}};
constexpr double kB5[6] = {37.0 / 378, 0, 250.0 / 621, 125.0 / 594, 0, 512.0 / 1771};
constexpr double kB4[6] = {2825.0 / 27648, 0,           18575.0 / 48384,
                           13525.0 / 55296, 277.0 / 14336, 1.0 / 4};

}  // namespace

FieldLine trace_field_line(const FieldEvaluator& b, const std::array<double, 3>& seed,
                           const TracerOptions& opt) {
  const double L = b.grid().L();
  const double bmax = std::max(b.max_magnitude(), 1e-300);
  FieldLine line;
  Vec3 x = wrap(seed, L);
  double s = 0.0;
  double h = opt.h_init;
  line.s.push_back(0.0);
  line.points.push_back(x);
  line.reason = FieldLine::Termination::ArcBudget;

  Vec3 k[6];
  while (s < opt.s_max) {
    if (line.points.size() >= opt.max_samples) {
      line.reason = FieldLine::Termination::SampleBudget;
      break;
    }
    double v0[3];
    b.value(x, v0);
    k[0] = {v0[0], v0[1], v0[2]};
    if (norm(k[0]) < opt.null_tol * bmax) {
      line.reason = FieldLine::Termination::NullProximity;
      break;
    }
    h = std::min({h, opt.s_max - s, opt.max_step});
    bool accepted = false;
    while (!accepted) {
      for (int st = 1; st < 6; ++st) {
        Vec3 xs = x;
        for (int j = 0; j < st; ++j) xs = add(xs, k[j], h * kA[st][j]);
        double vv[3];
        b.value(wrap(xs, L), vv);
        k[st] = {vv[0], vv[1], vv[2]};
      }
      Vec3 x5 = x, x4 = x;
      for (int st = 0; st < 6; ++st) {
        x5 = add(x5, k[st], h * kB5[st]);
        x4 = add(x4, k[st], h * kB4[st]);
      }
      const double err = norm({x5[0] - x4[0], x5[1] - x4[1], x5[2] - x4[2]});
      const double target = opt.tol * h;
      if (err <= target || h <= 1e-12) {
        if (h <= 1e-12) {
          line.reason = FieldLine::Termination::StepUnderflow;
          line.s.push_back(s);
          line.points.push_back(wrap(x5, L));
          return line;
        }
        s += h;
        x = wrap(x5, L);
        line.s.push_back(s);
        line.points.push_back(x);
        accepted = true;
        h *= std::min(5.0, 0.9 * std::pow(target / std::max(err, 1e-300), 0.2));
      } else {
        h *= std::max(0.1, 0.9 * std::pow(target / err, 0.25));
      }
    }
  }
  return line;
}

double field_line_residual(const FieldEvaluator& b, const FieldLine& line) {
  const double L = b.grid().L();
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < line.points.size(); ++i) {
    const double ds = line.s[i + 1] - line.s[i];
    if (ds <= 0.0) continue;
    Vec3 x = line.points[i];
    const int sub = 4;
    const double h = ds / sub;
    for (int m = 0; m < sub; ++m) {
      double v1[3], v2[3], v3[3], v4[3];
      b.value(wrap(x, L), v1);
      b.value(wrap(add(x, {v1[0], v1[1], v1[2]}, 0.5 * h), L), v2);
      b.value(wrap(add(x, {v2[0], v2[1], v2[2]}, 0.5 * h), L), v3);
      b.value(wrap(add(x, {v3[0], v3[1], v3[2]}, h), L), v4);
      for (int c = 0; c < 3; ++c)
        x[c] += h / 6.0 * (v1[c] + 2 * v2[c] + 2 * v3[c] + v4[c]);
    }
    double defect = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double d = std::remainder(x[c] - line.points[i + 1][c], L);
      defect += d * d;
    }
    worst = std::max(worst, std::sqrt(defect) / ds);
  }
  return worst;
}

}  // namespace smhd
