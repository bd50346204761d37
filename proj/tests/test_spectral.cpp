#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "spectral/ops.hpp"
#include "spectral/random.hpp"
#include "spectral/snapshot.hpp"

using namespace smhd;

namespace {
RealField coords(GridPtr g, int axis) {
  RealField f(g, 1);
  const int n = g->n();
  const double dx = g->dx();
  const std::size_t nr = g->real_size();
  for (std::size_t i = 0; i < nr; ++i) {
    std::size_t rem = i;
    int idx[3] = {0, 0, 0};
    for (int a = g->dim() - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rem % n);
      rem /= n;
    }
    f.comp[0][i] = idx[axis] * dx;
  }
  return f;
}

RealField map_real(const RealField& x, double (*fn)(double)) {
  RealField out = x;
  for (auto& v : out.comp[0]) v = fn(v);
  return out;
}

double max_abs_diff(const RealField& a, const RealField& b) {
  double m = 0.0;
  for (int c = 0; c < a.ncomp(); ++c)
    for (std::size_t i = 0; i < a.comp[c].size(); ++i)
      m = std::max(m, std::abs(a.comp[c][i] - b.comp[c][i]));
  return m;
}
}  // namespace

TEST_CASE("fft round trip and mode placement") {
  auto g = make_grid(2, 32);
  SUBCASE("constant field has only the zero mode, value c*n^dim") {
    RealField f(g, 1);
    for (auto& v : f.comp[0]) v = 2.5;
    SpectralField F = fft_forward(f);
    CHECK(F.at(0, 0).real() == doctest::Approx(2.5 * 32 * 32).epsilon(1e-14));
    double off = 0.0;
    for (std::size_t i = 1; i < g->spectral_size(); ++i) off = std::max(off, std::abs(F.at(0, i)));
    CHECK(off < 1e-10);
  }
  SUBCASE("cos(2 pi x / L) lands on the m = (1,0) mode pair") {
    SpectralField F = fft_forward(map_real(coords(g, 0), [](double x) { return std::cos(x); }));
    // the half spectrum halves only the last axis, so both m = (1,0) and
    // m = (-1,0) of the conjugate pair are stored
    int hits = 0;
    for (std::size_t i = 0; i < g->spectral_size(); ++i) {
      if (std::abs(F.at(0, i)) > 1e-8) {
        ++hits;
        CHECK(std::abs(g->mode(0, i)) == 1);
        CHECK(g->mode(1, i) == 0);
        CHECK(F.at(0, i).real() == doctest::Approx(0.5 * 32 * 32));
      }
    }
    CHECK(hits == 2);
  }
  SUBCASE("random field round trip < 1e-12") {
    Rng rng(11);
    RealField f(g, 1);
    for (auto& v : f.comp[0]) v = rng.normal();
    RealField back = fft_inverse(fft_forward(f));
    CHECK(max_abs_diff(f, back) < 1e-12);
  }
  SUBCASE("parseval") {
    Rng rng(12);
    SpectralField F = random_scalar(g, rng, 1.0);
    const double spec = l2_norm(F);
    const double quad = l2_norm(fft_inverse(F));
    CHECK(spec == doctest::Approx(quad).epsilon(1e-10));
  }
}

TEST_CASE("differential operators are exact multipliers") {
  auto g3 = make_grid(3, 16);
  SUBCASE("gradient of a constant vanishes") {
    RealField f(g3, 1);
    for (auto& v : f.comp[0]) v = 7.0;
    SpectralField G = gradient(fft_forward(f));
    CHECK(l2_norm(G) < 1e-12);
  }
  SUBCASE("div curl = 0") {
    Rng rng(5);
    SpectralField w(g3, 3);
    for (int c = 0; c < 3; ++c) w.comp(c) = random_scalar(g3, rng, 1.0).comp(0);
    SpectralField dcw = divergence(curl(w));
    CHECK(l2_norm(dcw) < 1e-12 * std::max(1.0, l2_norm(w)));
  }
  SUBCASE("laplacian eigenfunction") {
    auto g = make_grid(2, 32, 4.0);  // L = 4
    RealField x = coords(g, 0);
    RealField f = x;
    for (auto& v : f.comp[0]) v = std::sin(2.0 * M_PI * v / 4.0);
    RealField lap = fft_inverse(laplacian(fft_forward(f)));
    const double lam = std::pow(2.0 * M_PI / 4.0, 2);
    RealField expect = f;
    for (auto& v : expect.comp[0]) v *= -lam;
    CHECK(max_abs_diff(lap, expect) < 1e-11);
  }
  SUBCASE("curl rejects scalar input") {
    CHECK_THROWS_AS((void)curl(SpectralField(g3, 1)), std::invalid_argument);
  }
}

TEST_CASE("leray projector algebra") {
  auto g = make_grid(2, 32);
  Rng rng(42);
  SUBCASE("gradient fields are pure Q") {
    SpectralField grad = gradient(random_scalar(g, rng, 1.5));
    CHECK(l2_norm(leray_P(grad)) < 1e-12 * l2_norm(grad));
    CHECK(l2_norm(leray_Q(grad) - grad) < 1e-12 * l2_norm(grad));
  }
  SUBCASE("solenoidal fields are pure P") {
    SpectralField sol = random_solenoidal(g, rng, 1.0);
    CHECK(l2_norm(leray_Q(sol)) < 1e-12 * l2_norm(sol));
  }
  SUBCASE("single mode parallel to e1 is pure Q") {
    RealField v(g, 2);
    RealField x = coords(g, 0);
    for (std::size_t i = 0; i < g->real_size(); ++i) v.comp[0][i] = std::sin(x.comp[0][i]);
    SpectralField V = fft_forward(v);
    CHECK(l2_norm(leray_P(V)) < 1e-12 * l2_norm(V));
    CHECK(l2_norm(leray_Q(V) - V) < 1e-12 * l2_norm(V));
  }
  SUBCASE("P + Q = Id, P P = P, P Q = 0, div P v small (1000 random fields)") {
    double worst_sum = 0.0, worst_div = 0.0, worst_pq = 0.0, worst_pp = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      SpectralField v(g, 2);
      for (int c = 0; c < 2; ++c) v.comp(c) = random_scalar(g, rng, rng.uniform(0.5, 2.0)).comp(0);
      const double nv = l2_norm(v);
      SpectralField P = leray_P(v);
      SpectralField Q = leray_Q(v);
      worst_sum = std::max(worst_sum, l2_norm(P + Q - v) / nv);
      worst_div = std::max(worst_div, l2_norm(divergence(P)) / nv);
      worst_pq = std::max(worst_pq, l2_norm(leray_P(Q)) / nv);
      worst_pp = std::max(worst_pp, l2_norm(leray_P(P) - P) / nv);
    }
    CHECK(worst_sum < 1e-14);  // P is v - Q, so the sum is exact to roundoff
    CHECK(worst_div < 1e-10);
    CHECK(worst_pq < 1e-12);
    CHECK(worst_pp < 1e-12);
  }
}

TEST_CASE("diffusion semigroup") {
  auto g = make_grid(2, 32);
  Rng rng(3);
  SpectralField f = random_scalar(g, rng, 1.0);
  SUBCASE("t = 0 is the identity") {
    CHECK(l2_norm(diffusion_semigroup(f, 1.0, 0.0) - f) == 0.0);
  }
  SUBCASE("single mode decays by exp(-kappa t |k|^2)") {
    RealField c(g, 1);
    RealField x = coords(g, 0);
    for (std::size_t i = 0; i < g->real_size(); ++i) c.comp[0][i] = std::cos(x.comp[0][i]);
    SpectralField F = fft_forward(c);
    SpectralField H = diffusion_semigroup(F, 1.0, 1.0);
    CHECK(l2_norm(H) == doctest::Approx(std::exp(-1.0) * l2_norm(F)).epsilon(1e-12));
  }
  SUBCASE("semigroup property") {
    SpectralField one = diffusion_semigroup(f, 0.3, 0.7);
    SpectralField two = diffusion_semigroup(diffusion_semigroup(f, 0.3, 0.3), 0.3, 0.4);
    CHECK(l2_norm(one - two) < 1e-12 * l2_norm(f));
  }
  SUBCASE("forward then backward on band-limited data is the identity") {
    SpectralField band = dealias(f);
    SpectralField fwd = diffusion_semigroup(band, 0.05, 0.5);
    SpectralField back = diffusion_semigroup(fwd, 0.05, -0.5);
    CHECK(l2_norm(back - band) < 1e-10 * l2_norm(band));
  }
  SUBCASE("backward factor refuses non-band-limited fields") {
    SpectralField spiky(g, 1);
    spiky.at(0, g->spectral_size() - 1) = Complex{1.0, 0.0};  // above cutoff
    SpectralField mixed = f;
    mixed += spiky;
    CHECK_THROWS_AS((void)diffusion_semigroup(mixed, 1.0, -0.1), std::domain_error);
  }
}

TEST_CASE("inverse laplacian gradient") {
  auto g = make_grid(2, 32);
  SUBCASE("zero maps to zero") {
    auto r = inverse_laplacian_gradient(SpectralField(g, 1));
    CHECK(l2_norm(r.field) == 0.0);
    CHECK_FALSE(r.nonzero_mean_projected);
  }
  SUBCASE("cos -> (L / 2 pi) sin e1, and div w = +a") {
    RealField a(g, 1);
    RealField x = coords(g, 0);
    for (std::size_t i = 0; i < g->real_size(); ++i) a.comp[0][i] = std::cos(x.comp[0][i]);
    SpectralField A = fft_forward(a);
    auto r = inverse_laplacian_gradient(A);
    RealField w = fft_inverse(r.field);
    RealField expect(g, 2);
    for (std::size_t i = 0; i < g->real_size(); ++i) expect.comp[0][i] = std::sin(x.comp[0][i]);
    CHECK(max_abs_diff(w, expect) < 1e-12);
    // the operator's sign convention: divergence recovers +a exactly
    SpectralField div_w = divergence(r.field);
    CHECK(l2_norm(div_w - A) < 1e-12 * l2_norm(A));
  }
  SUBCASE("nonzero mean is projected out with a warning flag") {
    Rng rng(9);
    SpectralField a = random_scalar(g, rng, 1.0);
    a.at(0, 0) = Complex{32.0 * 32.0, 0.0};  // mean 1
    auto r = inverse_laplacian_gradient(a);
    CHECK(r.nonzero_mean_projected);
    SpectralField div_w = divergence(r.field);
    SpectralField a_meanfree = a;
    a_meanfree.at(0, 0) = Complex{0.0, 0.0};
    CHECK(l2_norm(div_w - a_meanfree) < 1e-12 * l2_norm(a_meanfree));
  }
}

TEST_CASE("dealiasing") {
  SUBCASE("band-limited field unchanged, idempotent, cutoff mode zeroed") {
    auto g = make_grid(2, 32);
    Rng rng(8);
    SpectralField f = random_scalar(g, rng, 1.0);  // already dealiased
    CHECK(l2_norm(dealias(f) - f) == 0.0);
    SpectralField spik(g, 1);
    for (std::size_t i = 0; i < g->spectral_size(); ++i)
      if (g->mode(0, i) == 32 / 2 - 1 && g->mode(1, i) == 0) spik.at(0, i) = Complex{1.0, 0.0};
    CHECK(l2_norm(dealias(spik)) == 0.0);
  }
  SUBCASE("pseudo-spectral product matches exact convolution on the retained band (n = 16)") {
    auto g = make_grid(2, 16);
    // two modes at the cutoff m = 5: product has m in {0, 10}; only m = 0 is retained
    RealField fa(g, 1), fb(g, 1);
    RealField x = coords(g, 0);
    for (std::size_t i = 0; i < g->real_size(); ++i) {
      fa.comp[0][i] = std::cos(5.0 * x.comp[0][i]);
      fb.comp[0][i] = std::cos(5.0 * x.comp[0][i]);
    }
    SpectralField prod = multiply(fft_forward(fa), fft_forward(fb));
    // exact convolution of the coefficients restricted to |m| <= 5: constant 1/2
    RealField pr = fft_inverse(prod);
    for (double v : pr.comp[0]) CHECK(v == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("multiplier operators commute with each other on random fields") {
  auto g = make_grid(2, 32);
  Rng rng(21);
  SpectralField f = random_scalar(g, rng, 1.0);
  SpectralField a = laplacian(diffusion_semigroup(f, 0.1, 0.2));
  SpectralField b = diffusion_semigroup(laplacian(f), 0.1, 0.2);
  CHECK(l2_norm(a - b) < 1e-12 * std::max(1.0, l2_norm(a)));
}

TEST_CASE("snapshot round trip") {
  auto g = make_grid(2, 16, 3.0);
  Rng rng(77);
  SpectralField f(g, 2);
  for (int c = 0; c < 2; ++c) f.comp(c) = random_scalar(g, rng, 1.0).comp(0);
  RealField r = fft_inverse(f);
  const std::string path = (std::filesystem::temp_directory_path() / "smhd_snap_test.bin").string();
  write_snapshot(path, r, 1.25);
  Snapshot s = read_snapshot(path);
  CHECK(s.time == 1.25);
  CHECK(s.field.grid->dim() == 2);
  CHECK(s.field.grid->n() == 16);
  CHECK(s.field.grid->L() == 3.0);
  CHECK(s.field.ncomp() == 2);
  CHECK(max_abs_diff(s.field, r) == 0.0);
  std::filesystem::remove(path);
}
