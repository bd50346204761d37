#pragma once

#include <array>

#include "spectral/field.hpp"

namespace smhd {

// Off-grid evaluation of a 3-D field. Direct spectral summation is exact to
// roundoff but costs O(n^3) per point; tricubic (Catmull-Rom) interpolation
// of the real mirror is O(1). Auto picks spectral for n <= 48 and tricubic
// above (the tracer cost crossover).
class FieldEvaluator {
 public:
  enum class Method { Spectral, Tricubic, Auto };

  explicit FieldEvaluator(const SpectralField& f, Method m = Method::Auto);

  int ncomp() const { return ncomp_; }
  const Grid& grid() const { return *grid_; }

  // out[c] = f_c(x); x is wrapped periodically.
  void value(const std::array<double, 3>& x, double* out) const;
  // jac[c*3 + j] = d_j f_c(x); always evaluated spectrally.
  void value_and_jacobian(const std::array<double, 3>& x, double* val, double* jac) const;

  // max over grid points of the pointwise Euclidean magnitude.
  double max_magnitude() const { return max_mag_; }
  // max over grid points of the Frobenius norm of the gradient.
  double max_gradient() const;

 private:
  void spectral_eval(const std::array<double, 3>& x, double* val, double* jac) const;
  void tricubic_eval(const std::array<double, 3>& x, double* val) const;

  GridPtr grid_;
  int ncomp_;
  bool use_spectral_;
  std::vector<std::vector<Complex>> coef_;   // spectral path
  std::vector<std::vector<double>> real_;    // tricubic path
  double max_mag_ = 0.0;
  mutable double max_grad_ = -1.0;
};

}  // namespace smhd
