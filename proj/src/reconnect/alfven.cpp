#include "reconnect/alfven.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

struct FlowMapIntegrator::Interp {
  std::unique_ptr<FieldEvaluator> v;   // 3 components
  std::unique_ptr<FieldEvaluator> dv;  // 9 components, row major c*3+j
};

std::shared_ptr<FlowMapIntegrator::Interp> FlowMapIntegrator::make_interp(
    const SpectralField& v) const {
  auto ip = std::make_shared<Interp>();
  // tricubic at every size: called once per solver step, evaluated per seed
  ip->v = std::make_unique<FieldEvaluator>(v, FieldEvaluator::Method::Tricubic);
  SpectralField dv(grid_, 9);
  const Grid& g = *grid_;
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < 3; ++j) {
      const auto& kj = g.k(j);
      auto& out = dv.comp(c * 3 + j);
      const auto& in = v.comp(c);
      for (std::size_t i = 0; i < g.spectral_size(); ++i)
        out[i] = Complex{0.0, kj[i]} * in[i];
    }
  ip->dv = std::make_unique<FieldEvaluator>(dv, FieldEvaluator::Method::Tricubic);
  return ip;
}

FlowMapIntegrator::FlowMapIntegrator(GridPtr g, std::vector<std::array<double, 3>> seeds,
                                     double exclusion_threshold)
    : grid_(std::move(g)), excl_(exclusion_threshold), seeds_(std::move(seeds)) {
  if (grid_->dim() != 3) throw std::invalid_argument("FlowMapIntegrator: 3-D only");
  pos_ = seeds_;
  grad_.assign(seeds_.size(), {1, 0, 0, 0, 1, 0, 0, 0, 1});
  excluded_.assign(seeds_.size(), false);
}

void FlowMapIntegrator::begin(const SpectralField& v0) { prev_ = make_interp(v0); }

namespace {
inline std::array<double, 9> matmul(const double* A, const std::array<double, 9>& B) {
  std::array<double, 9> C{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) C[i * 3 + j] += A[i * 3 + k] * B[k * 3 + j];
  return C;
}
inline double frob(const std::array<double, 9>& A) {
  double s = 0.0;
  for (double v : A) s += v * v;
  return std::sqrt(s);
}
}  // namespace

void FlowMapIntegrator::advance(const SpectralField& v_next, double dt) {
  if (!prev_) throw std::logic_error("FlowMapIntegrator: begin() was not called");
  auto next = make_interp(v_next);
  const double L = grid_->L();
  for (std::size_t i = 0; i < pos_.size(); ++i) {
    if (excluded_[i]) continue;
    std::array<double, 3>& x = pos_[i];
    std::array<double, 9>& G = grad_[i];
    double k1[3], J1[9];
    prev_->v->value(x, k1);
    prev_->dv->value(x, J1);
    const std::array<double, 9> K1 = matmul(J1, G);
    std::array<double, 3> xp;
    std::array<double, 9> Gp;
    for (int c = 0; c < 3; ++c) xp[c] = x[c] + dt * k1[c];
    for (int c = 0; c < 9; ++c) Gp[c] = G[c] + dt * K1[c];
    std::array<double, 3> xpw = xp;
    for (int c = 0; c < 3; ++c) xpw[c] -= L * std::floor(xpw[c] / L);
    double k2[3], J2[9];
    next->v->value(xpw, k2);
    next->dv->value(xpw, J2);
    const std::array<double, 9> K2 = matmul(J2, Gp);
    for (int c = 0; c < 3; ++c) {
      x[c] += 0.5 * dt * (k1[c] + k2[c]);
      x[c] -= L * std::floor(x[c] / L);
    }
    for (int c = 0; c < 9; ++c) G[c] += 0.5 * dt * (K1[c] + K2[c]);
    if (frob(G) > excl_) excluded_[i] = true;
  }
  prev_ = std::move(next);
}

int FlowMapIntegrator::excluded_count() const {
  int c = 0;
  for (bool e : excluded_)
    if (e) ++c;
  return c;
}

double FlowMapIntegrator::transport_residual(const SpectralField& b0,
                                             const SpectralField& b_final) const {
  FieldEvaluator e0(b0, FieldEvaluator::Method::Spectral);
  FieldEvaluator eT(b_final, FieldEvaluator::Method::Spectral);
  double worst = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < seeds_.size(); ++i) {
    if (excluded_[i]) continue;
    double bb0[3], bT[3];
    e0.value(seeds_[i], bb0);
    eT.value(pos_[i], bT);
    const auto& G = grad_[i];
    double transported[3];
    for (int c = 0; c < 3; ++c)
      transported[c] = G[c * 3 + 0] * bb0[0] + G[c * 3 + 1] * bb0[1] + G[c * 3 + 2] * bb0[2];
    double defect = 0.0, mag = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double d = bT[c] - transported[c];
      defect += d * d;
      mag += transported[c] * transported[c];
    }
    worst = std::max(worst, std::sqrt(defect));
    scale = std::max(scale, std::sqrt(mag));
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

std::vector<std::array<double, 3>> lattice_seeds(GridPtr g, int count) {
  std::vector<std::array<double, 3>> seeds;
  const int per_axis = std::max(1, static_cast<int>(std::round(std::cbrt(double(count)))));
  const double step = g->L() / per_axis;
  for (int i = 0; i < per_axis && static_cast<int>(seeds.size()) < count; ++i)
    for (int j = 0; j < per_axis && static_cast<int>(seeds.size()) < count; ++j)
      for (int k = 0; k < per_axis && static_cast<int>(seeds.size()) < count; ++k)
        seeds.push_back({(i + 0.37) * step, (j + 0.61) * step, (k + 0.23) * step});
  return seeds;
}

}  // namespace smhd
