#include "spectral/grid.hpp"

namespace smhd {

namespace {
bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

Grid::Grid(int dim, int n, double box_length)
    : dim_(dim), n_(n), L_(box_length) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("grid dim must be 2 or 3");
  if (!power_of_two(n) || n < 8) throw std::invalid_argument("grid n must be a power of two >= 8");
  if (!(box_length > 0)) throw std::invalid_argument("grid box length must be positive");

  spec_size_ = fft::spectral_size(dim, n);
  real_size_ = fft::real_size(dim, n);

  const double k0 = 2.0 * M_PI / L_;
  const int half = n / 2;
  const int mcut = n / 3;  // keep |m| <= floor(n/3)

  for (int a = 0; a < dim; ++a) kcomp_[a].resize(spec_size_);
  k2_.resize(spec_size_);
  pweight_.resize(spec_size_);
  mask_.resize(spec_size_);

  kmax_dealiased_ = 0.0;
  kmax_full_ = 0.0;

  const int nlast = half + 1;
  for (std::size_t idx = 0; idx < spec_size_; ++idx) {
    std::size_t rem = idx;
    int m[3] = {0, 0, 0};
    const int ilast = static_cast<int>(rem % nlast);
    rem /= nlast;
    m[dim - 1] = ilast;
    for (int a = dim - 2; a >= 0; --a) {
      int i = static_cast<int>(rem % n);
      rem /= n;
      m[a] = (i <= half) ? i : i - n;
    }
    // note: for full axes i == n/2 maps to m = +n/2 here; the Nyquist mode
    // is annihilated by dealiasing and excluded from derivative stencils
    // only through the mask, never specially cased.
    double kk2 = 0.0;
    bool keep = true;
    for (int a = 0; a < dim; ++a) {
      const double ka = k0 * m[a];
      kcomp_[a][idx] = ka;
      kk2 += ka * ka;
      if (std::abs(m[a]) > mcut) keep = false;
    }
    k2_[idx] = kk2;
    mask_[idx] = keep ? 1 : 0;
    pweight_[idx] = (ilast == 0 || ilast == half) ? 1.0 : 2.0;
    const double kk = std::sqrt(kk2);
    kmax_full_ = std::max(kmax_full_, kk);
    if (keep) kmax_dealiased_ = std::max(kmax_dealiased_, kk);
  }
}

int Grid::mode(int axis, std::size_t idx) const {
  return static_cast<int>(std::lround(kcomp_[axis][idx] / (2.0 * M_PI / L_)));
}

GridPtr make_grid(int dim, int n, double box_length) {
  return std::make_shared<const Grid>(dim, n, box_length);
}

}  // namespace smhd
