#include "mhd/rhs.hpp"

#include <cmath>

namespace smhd {

namespace {

// Real mirrors of a vector field and of all its first derivatives.
struct VecMirror {
  std::vector<std::vector<double>> comp;   // [c]
  std::vector<std::vector<double>> deriv;  // [c*dim + j] = d_j comp_c
};

VecMirror mirror_with_derivatives(const SpectralField& v) {
  const Grid& g = v.grid();
  const int d = g.dim();
  VecMirror m;
  m.comp.resize(v.ncomp());
  m.deriv.resize(static_cast<std::size_t>(v.ncomp()) * d);
  for (int c = 0; c < v.ncomp(); ++c) {
    m.comp[c].resize(g.real_size());
    fft::inverse(d, g.n(), v.comp(c).data(), m.comp[c].data());
    for (int j = 0; j < d; ++j) {
      std::vector<Complex> dcoef(g.spectral_size());
      const auto& kj = g.k(j);
      for (std::size_t i = 0; i < dcoef.size(); ++i)
        dcoef[i] = Complex{0.0, 1.0} * kj[i] * v.at(c, i);
      auto& out = m.deriv[static_cast<std::size_t>(c) * d + j];
      out.resize(g.real_size());
      fft::inverse(d, g.n(), dcoef.data(), out.data());
    }
  }
  return m;
}

// emf = v x b: scalar (2-D) or 3-vector (3-D), dealiased.
SpectralField emf_field(GridPtr g, const VecMirror& v, const VecMirror& b) {
  const int d = g->dim();
  const std::size_t nr = g->real_size();
  if (d == 2) {
    std::vector<double> e(nr);
    for (std::size_t i = 0; i < nr; ++i)
      e[i] = v.comp[0][i] * b.comp[1][i] - v.comp[1][i] * b.comp[0][i];
    SpectralField E(g, 1);
    fft::forward(2, g->n(), e.data(), E.comp(0).data());
    return dealias(E);
  }
  RealField e(g, 3);
  for (std::size_t i = 0; i < nr; ++i) {
    e.comp[0][i] = v.comp[1][i] * b.comp[2][i] - v.comp[2][i] * b.comp[1][i];
    e.comp[1][i] = v.comp[2][i] * b.comp[0][i] - v.comp[0][i] * b.comp[2][i];
    e.comp[2][i] = v.comp[0][i] * b.comp[1][i] - v.comp[1][i] * b.comp[0][i];
  }
  return dealias(fft_forward(e));
}

SpectralField induction_term(GridPtr g, const VecMirror& v, const VecMirror& b) {
  SpectralField emf = emf_field(g, v, b);
  return g->dim() == 2 ? curl2d_scalar(emf) : curl(emf);
}

}  // namespace

SpectralField pressure_field(const SpectralField& a, const PhysicalParams& p) {
  const Grid& g = a.grid();
  RealField ar = fft_inverse(a);
  const double A = p.pressure_amplitude();
  std::vector<double> pr(g.real_size());
  for (std::size_t i = 0; i < pr.size(); ++i) {
    const double rho = 1.0 + ar.comp[0][i];
    if (rho < p.density_floor) throw DensityFloorError(rho);
    pr[i] = A * std::pow(rho, p.gamma);
  }
  SpectralField P(a.grid_ptr(), 1);
  fft::forward(g.dim(), g.n(), pr.data(), P.comp(0).data());
  return dealias(P);
}

SpectralField k_of_a(const SpectralField& a, const PhysicalParams& p) {
  const Grid& g = a.grid();
  RealField ar = fft_inverse(a);
  const double Ag = p.pressure_amplitude() * p.gamma;
  std::vector<double> kr(g.real_size());
  for (std::size_t i = 0; i < kr.size(); ++i) {
    const double rho = 1.0 + ar.comp[0][i];
    if (rho < p.density_floor) throw DensityFloorError(rho);
    kr[i] = Ag * (std::pow(rho, p.gamma - 1.0) - 1.0);
  }
  SpectralField K(a.grid_ptr(), 1);
  fft::forward(g.dim(), g.n(), kr.data(), K.comp(0).data());
  return dealias(K);
}

CompressibleRhs rhs_cmhd(const CompressibleState& s, const PhysicalParams& p) {
  GridPtr gp = s.a.grid_ptr();
  const Grid& g = *gp;
  const int d = g.dim();
  const std::size_t nr = g.real_size();
  const std::size_t ns = g.spectral_size();

  RealField ar = fft_inverse(s.a);
  double rho_min = 1e300;
  std::vector<double> inv_rho(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    const double rho = 1.0 + ar.comp[0][i];
    rho_min = std::min(rho_min, rho);
    inv_rho[i] = 1.0 / rho;
  }
  if (rho_min < p.density_floor) throw DensityFloorError(rho_min);

  VecMirror vm = mirror_with_derivatives(s.v);
  VecMirror bm = mirror_with_derivatives(s.b);

  CompressibleRhs out{SpectralField(gp, 1), SpectralField(gp, d), SpectralField(gp, d)};

  // continuity: a_t = -div(v) - div(a v)
  {
    RealField av(gp, d);
    for (int c = 0; c < d; ++c)
      for (std::size_t i = 0; i < nr; ++i) av.comp[c][i] = ar.comp[0][i] * vm.comp[c][i];
    SpectralField AV = dealias(fft_forward(av));
    SpectralField total = s.v;
    total += AV;
    out.a_t = divergence(total);
    out.a_t *= -1.0;
  }

  // momentum
  {
    // F = mu Lap v + (lambda+mu) grad div v - grad P + b.grad b - grad |b|^2 / 2
    SpectralField F(gp, d);
    const SpectralField P = pressure_field(s.a, p);
    SpectralField divv = divergence(s.v);
    const auto& k2 = g.k2();
    RealField lorentz(gp, d);
    std::vector<double> b2(nr, 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
      for (int c = 0; c < d; ++c) {
        double acc = 0.0;
        for (int j = 0; j < d; ++j)
          acc += bm.comp[j][i] * bm.deriv[static_cast<std::size_t>(c) * d + j][i];
        lorentz.comp[c][i] = acc;
        b2[i] += bm.comp[c][i] * bm.comp[c][i];
      }
    }
    SpectralField Lor = dealias(fft_forward(lorentz));
    SpectralField B2(gp, 1);
    fft::forward(d, g.n(), b2.data(), B2.comp(0).data());
    B2 = dealias(B2);
    for (int c = 0; c < d; ++c) {
      const auto& kc = g.k(c);
      for (std::size_t i = 0; i < ns; ++i) {
        const Complex ikc{0.0, kc[i]};
        F.at(c, i) = -p.mu * k2[i] * s.v.at(c, i) + (p.lambda + p.mu) * ikc * divv.at(0, i) -
                     ikc * P.at(0, i) + Lor.at(c, i) - 0.5 * ikc * B2.at(0, i);
      }
    }
    // v_t = -v.grad v + (1/rho) F
    RealField Fr = fft_inverse(F);
    RealField vt(gp, d);
    for (int c = 0; c < d; ++c)
      for (std::size_t i = 0; i < nr; ++i) {
        double conv = 0.0;
        for (int j = 0; j < d; ++j)
          conv += vm.comp[j][i] * vm.deriv[static_cast<std::size_t>(c) * d + j][i];
        vt.comp[c][i] = -conv + inv_rho[i] * Fr.comp[c][i];
      }
    out.v_t = dealias(fft_forward(vt));
  }

  // induction (curl form) + diffusion
  out.b_t = induction_term(gp, vm, bm);
  out.b_t += p.eta * laplacian(s.b);
  return out;
}

IncompressibleRhs rhs_imhd(const IncompressibleState& s, const PhysicalParams& p,
                           double solenoidal_tol) {
  GridPtr gp = s.V.grid_ptr();
  const Grid& g = *gp;
  const int d = g.dim();
  if (relative_divergence(s.V) > solenoidal_tol || relative_divergence(s.B) > solenoidal_tol)
    throw std::invalid_argument("rhs_imhd: input is not solenoidal");

  VecMirror vm = mirror_with_derivatives(s.V);
  VecMirror bm = mirror_with_derivatives(s.B);

  // B.grad B - V.grad V in one pass so aligned V = B cancels exactly
  RealField nl(gp, d);
  for (int c = 0; c < d; ++c)
    for (std::size_t i = 0; i < g.real_size(); ++i) {
      double acc = 0.0;
      for (int j = 0; j < d; ++j)
        acc += bm.comp[j][i] * bm.deriv[static_cast<std::size_t>(c) * d + j][i] -
               vm.comp[j][i] * vm.deriv[static_cast<std::size_t>(c) * d + j][i];
      nl.comp[c][i] = acc;
    }
  IncompressibleRhs out{leray_P(dealias(fft_forward(nl))), induction_term(gp, vm, bm)};
  out.V_t += p.mu * laplacian(s.V);
  out.B_t += p.eta * laplacian(s.B);
  return out;
}

SpectralField incompressible_pressure(const IncompressibleState& s, const PhysicalParams& p) {
  (void)p;
  GridPtr gp = s.V.grid_ptr();
  const Grid& g = *gp;
  const int d = g.dim();
  VecMirror vm = mirror_with_derivatives(s.V);
  VecMirror bm = mirror_with_derivatives(s.B);
  RealField nl(gp, d);
  for (int c = 0; c < d; ++c)
    for (std::size_t i = 0; i < g.real_size(); ++i) {
      double acc = 0.0;
      for (int j = 0; j < d; ++j)
        acc += bm.comp[j][i] * bm.deriv[static_cast<std::size_t>(c) * d + j][i] -
               vm.comp[j][i] * vm.deriv[static_cast<std::size_t>(c) * d + j][i];
      nl.comp[c][i] = acc;
    }
  SpectralField F = dealias(fft_forward(nl));
  // grad Pi = Q F  =>  Pi_hat = -div(F)_hat / |k|^2, zero mean
  SpectralField divF = divergence(F);
  SpectralField Pi(gp, 1);
  const auto& k2 = g.k2();
  for (std::size_t i = 1; i < g.spectral_size(); ++i)
    if (k2[i] > 0.0) Pi.at(0, i) = -divF.at(0, i) / k2[i];
  return Pi;
}

}  // namespace smhd
