#include "spectral/field.hpp"

namespace smhd {

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  for (int c = 0; c < ncomp(); ++c)
    for (std::size_t i = 0; i < comp_[c].size(); ++i) comp_[c][i] += o.comp_[c][i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  for (int c = 0; c < ncomp(); ++c)
    for (std::size_t i = 0; i < comp_[c].size(); ++i) comp_[c][i] -= o.comp_[c][i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (int c = 0; c < ncomp(); ++c)
    for (auto& v : comp_[c]) v *= s;
  return *this;
}

SpectralField fft_forward(const RealField& f) {
  SpectralField F(f.grid, f.ncomp());
  for (int c = 0; c < f.ncomp(); ++c)
    fft::forward(f.grid->dim(), f.grid->n(), f.comp[c].data(), F.comp(c).data());
  return F;
}

RealField fft_inverse(const SpectralField& F) {
  RealField f(F.grid_ptr(), F.ncomp());
  for (int c = 0; c < F.ncomp(); ++c)
    fft::inverse(F.grid().dim(), F.grid().n(), F.comp(c).data(), f.comp[c].data());
  return f;
}

SpectralField fft_forward_scalar(GridPtr g, const std::vector<double>& data) {
  SpectralField F(g, 1);
  fft::forward(g->dim(), g->n(), data.data(), F.comp(0).data());
  return F;
}

}  // namespace smhd
