#pragma once

#include "spectral/field.hpp"

namespace smhd {

// ---- reductions -----------------------------------------------------------

// Zero-mode value divided by n^dim (the field average).
double mean(const SpectralField& f, int c = 0);

// L2 norm over all components via Parseval (forward unnormalized, inverse
// carries 1/n^dim, so ||f||^2 = L^d/n^{2d} * sum w |f_hat|^2).
double l2_norm(const SpectralField& f);

// Grid quadrature norms (uniform cell volume weights; p = inf is the max).
double lp_norm(const RealField& f, double p);
double l2_norm(const RealField& f);
double linf_norm(const RealField& f);

// ---- exact Fourier-multiplier operators ------------------------------------

SpectralField gradient(const SpectralField& f);    // scalar -> vector
SpectralField divergence(const SpectralField& v);  // vector -> scalar
// 3-D: vector -> vector. 2-D: vector -> scalar (the z-component).
SpectralField curl(const SpectralField& v);
// 2-D only: scalar e -> (d_y e, -d_x e), the curl of e * e_z.
SpectralField curl2d_scalar(const SpectralField& e);
SpectralField laplacian(const SpectralField& f);

// Leray projectors: Q = -(-Lap)^{-1} grad div, P = Id - Q. The k = 0 mode
// belongs to P (homogeneous operators exclude it).
SpectralField leray_P(const SpectralField& v);
SpectralField leray_Q(const SpectralField& v);

// Multiplies mode k by exp(-kappa*t*|k|^2). A negative kappa*t is the
// backward factor; it is accepted only on fields with no energy above the
// dealiasing cutoff (everything outside the retained band is zeroed) and
// throws on exponent overflow.
SpectralField diffusion_semigroup(const SpectralField& f, double kappa, double t);

// Realizes the map a -> w with w_hat(k) = -(i k / |k|^2) a_hat(k), w_hat(0)=0,
// so that div w = +a. (The paper's (-Lap)^{-1} grad a is -w; see effective
// velocity in mhd/diagnostics.) A nonzero mean is projected out and flagged.
struct InvLapGradResult {
  SpectralField field;
  bool nonzero_mean_projected = false;
};
InvLapGradResult inverse_laplacian_gradient(const SpectralField& a);

// 2/3-rule truncation; idempotent.
SpectralField dealias(const SpectralField& f);

// Real-space coordinate along one axis (x_i = i L / n), useful for building
// analytic initial data.
RealField coordinates(GridPtr g, int axis);

// Pointwise product of two scalar fields, computed in real space and
// dealiased. Cubic terms are formed by two successive calls.
SpectralField multiply(const SpectralField& a, const SpectralField& b);
// Same, with precomputed real mirrors (avoids repeated inverse transforms).
SpectralField product_to_spectral(GridPtr g, const std::vector<double>& a,
                                  const std::vector<double>& b);

}  // namespace smhd
