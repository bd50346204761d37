#include "besov/bony.hpp"

#include <stdexcept>

namespace smhd {

namespace {
void check_pair(const SpectralField& g, const SpectralField& h) {
  if (!g.grid().same_as(h.grid())) throw std::invalid_argument("bony: grid mismatch");
  if (!g.is_scalar() || !h.is_scalar()) throw std::invalid_argument("bony: scalar fields expected");
}

SpectralField raw_product(GridPtr grid, const std::vector<double>& a,
                          const std::vector<double>& b) {
  std::vector<double> prod(grid->real_size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a[i] * b[i];
  SpectralField out(grid, 1);
  fft::forward(grid->dim(), grid->n(), prod.data(), out.comp(0).data());
  return out;
}
}  // namespace

SpectralField bony_paraproduct(const SpectralField& g, const SpectralField& h,
                               const DyadicPartition& part, bool use_dealias) {
  check_pair(g, h);
  GridPtr grid = g.grid_ptr();
  SpectralField acc(grid, 1);
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    RealField sg = fft_inverse(low_cutoff(g, part, j - 1));
    RealField dh = fft_inverse(dyadic_block(h, part, j));
    acc += use_dealias ? product_to_spectral(grid, sg.comp[0], dh.comp[0])
                       : raw_product(grid, sg.comp[0], dh.comp[0]);
  }
  return acc;
}

SpectralField bony_remainder(const SpectralField& g, const SpectralField& h,
                             const DyadicPartition& part, bool use_dealias) {
  check_pair(g, h);
  GridPtr grid = g.grid_ptr();
  // cache real mirrors of all bands
  std::vector<RealField> dg, dh;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    dg.push_back(fft_inverse(dyadic_block(g, part, j)));
    dh.push_back(fft_inverse(dyadic_block(h, part, j)));
  }
  SpectralField acc(grid, 1);
  const int nb = part.j_max() - part.j_min() + 1;
  for (int bj = 0; bj < nb; ++bj) {
    for (int bk = std::max(0, bj - 1); bk <= std::min(nb - 1, bj + 1); ++bk) {
      acc += use_dealias ? product_to_spectral(grid, dg[bk].comp[0], dh[bj].comp[0])
                         : raw_product(grid, dg[bk].comp[0], dh[bj].comp[0]);
    }
  }
  return acc;
}

}  // namespace smhd
