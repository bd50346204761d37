#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mhd/state.hpp"
#include "reconnect/alfven.hpp"
#include "reconnect/recon_data.hpp"
#include "reconnect/topology.hpp"
#include "spectral/random.hpp"

using namespace smhd;

TEST_CASE("abc beltrami fields") {
  auto g = make_grid(3, 32);
  SUBCASE("(1,0,0), N = 1 is (sin z, cos z, 0) and a curl eigenfield") {
    SpectralField B = abc_beltrami({1.0, 0.0, 0.0, 1}, g);
    CHECK(beltrami_residual(B, 1) < 1e-12);
    RealField z = coordinates(g, 2);
    RealField br = fft_inverse(B);
    for (std::size_t i = 0; i < g->real_size(); i += 97) {
      CHECK(br.comp[0][i] == doctest::Approx(std::sin(z.comp[0][i])).epsilon(1e-12));
      CHECK(br.comp[1][i] == doctest::Approx(std::cos(z.comp[0][i])).epsilon(1e-12));
      CHECK(std::abs(br.comp[2][i]) < 1e-12);
    }
  }
  SUBCASE("any spec is exactly divergence free and a curl eigenfield") {
    for (const BeltramiSpec spec : {BeltramiSpec{1.0, 0.1, 0.1, 2}, BeltramiSpec{0.7, 0.5, 0.3, 4}}) {
      SpectralField B = abc_beltrami(spec, g);
      CHECK(relative_divergence(B) < 1e-12);
      CHECK(beltrami_residual(B, spec.N) < 1e-10);
    }
  }
  SUBCASE("(1, 0.1, 0.1), N = 2 has no zeros on the grid") {
    SpectralField B = abc_beltrami({1.0, 0.1, 0.1, 2}, g);
    RealField br = fft_inverse(B);
    double mn = 1e300;
    for (std::size_t i = 0; i < g->real_size(); ++i) {
      const double m = std::sqrt(br.comp[0][i] * br.comp[0][i] + br.comp[1][i] * br.comp[1][i] +
                                 br.comp[2][i] * br.comp[2][i]);
      mn = std::min(mn, m);
    }
    CHECK(mn > 0.5);
  }
  SUBCASE("frequency beyond the retained band is rejected") {
    CHECK_THROWS_AS((void)abc_beltrami({1.0, 0.1, 0.1, 14}, g), std::invalid_argument);
  }
}

TEST_CASE("null finding") {
  auto g = make_grid(3, 32);
  SUBCASE("constant field has no nulls") {
    RealField c(g, 3);
    for (auto& v : c.comp[0]) v = 0.4;
    for (auto& v : c.comp[1]) v = -0.2;
    for (auto& v : c.comp[2]) v = 0.1;
    CHECK(find_nulls(fft_forward(c)).empty());
  }
  SUBCASE("saddle model field: center null is hyperbolic with eigenvalues (1, 1, -2)") {
    ReconnectionFields f = build_reconnection_data({0.0, 1.0, 0.0}, g, PhysicalParams{});
    std::vector<NullPoint> nulls = find_nulls(f.perturbation_curl);
    const double c = 0.5 * g->L();
    const NullPoint* center = nullptr;
    for (const auto& np : nulls) {
      // every reported null is solenoidal: the trace vanishes
      double tr = 0.0;
      for (auto ev : np.eigenvalues) tr += ev.real();
      CHECK(std::abs(tr) < 1e-7);
      CHECK(np.field_magnitude < 1e-9 * 2.5);
      double d = 0.0;
      for (int a = 0; a < 3; ++a) d += std::pow(np.location[a] - c, 2);
      if (std::sqrt(d) < 0.1) center = &np;
    }
    REQUIRE(center != nullptr);
    CHECK(center->hyperbolic);
    std::vector<double> re;
    for (auto ev : center->eigenvalues) {
      re.push_back(ev.real());
      CHECK(std::abs(ev.imag()) < 1e-8);
    }
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-2.0).epsilon(1e-8));
    CHECK(re[1] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(re[2] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(hyperbolic_count(nulls) >= 1);
  }
  SUBCASE("ABC(1,1,1), N = 1 has eight nulls") {
    SpectralField B = abc_beltrami({1.0, 1.0, 1.0, 1}, g);
    NullSearchOptions opt;
    opt.seed_threshold = 0.35;
    std::vector<NullPoint> nulls = find_nulls(B, opt);
    CHECK(nulls.size() == 8);
    for (const auto& np : nulls)
      CHECK(std::abs(np.eigenvalues[0].real() + np.eigenvalues[1].real() +
                     np.eigenvalues[2].real()) < 1e-7);
  }
  SUBCASE("determinism: identical inputs give identical output order") {
    SpectralField B = abc_beltrami({1.0, 1.0, 1.0, 1}, g);
    auto a = find_nulls(B);
    auto b = find_nulls(B);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int c = 0; c < 3; ++c) CHECK(a[i].location[c] == b[i].location[c]);
  }
}

TEST_CASE("reconnection data construction") {
  auto g = make_grid(3, 32);
  PhysicalParams p;
  p.mu = p.eta = 0.25;
  SUBCASE("eps = 0 collapses to the aligned pair") {
    ReconnectionData rd;
    rd.epsilon = 0.0;
    ReconnectionFields f = build_reconnection_data(rd, g, p);
    CHECK(l2_norm(f.B0 - f.V0) == 0.0);
    CHECK(relative_divergence(f.V0) < 1e-12);
  }
  SUBCASE("M = 0: forward heat recovers eps curl(psi W)") {
    ReconnectionData rd;
    rd.M = 0.0;
    ReconnectionFields f = build_reconnection_data(rd, g, p);
    CHECK(l2_norm(f.V0) == 0.0);
    SpectralField fwd = diffusion_semigroup(f.B0, p.eta, rd.T);
    SpectralField expect = f.perturbation_curl;
    expect *= rd.epsilon;
    CHECK(l2_norm(fwd - expect) < 1e-8 * l2_norm(expect));
  }
  SUBCASE("exposed potential reproduces the perturbation under curl") {
    ReconnectionFields f = build_reconnection_data({}, g, p);
    CHECK(l2_norm(curl(f.W) - f.perturbation_curl) < 1e-11 * l2_norm(f.perturbation_curl));
  }
  SUBCASE("default recipe: B0 null free, curl(psi W) has a hyperbolic null") {
    ReconnectionFields f = build_reconnection_data({}, g, p);
    CHECK(relative_divergence(f.B0) < 1e-11);
    CHECK(find_nulls(f.B0).empty());
    CHECK(hyperbolic_count(find_nulls(f.perturbation_curl)) >= 1);
    CHECK(f.epsilon_warning);  // desk-scale eps exceeds the N^{-r-1} guidance
  }
  SUBCASE("the literal gaussian-linear recipe yields only degenerate nulls") {
    ReconnectionData rd;
    rd.perturbation = "gaussian-linear";
    rd.band_limit = 4;
    ReconnectionFields f = build_reconnection_data(rd, g, p);
    CHECK(hyperbolic_count(find_nulls(f.perturbation_curl)) == 0);
  }
}

TEST_CASE("field line tracing") {
  auto g = make_grid(3, 32);
  SUBCASE("uniform field: gamma(s) = seed + s e1 (mod L)") {
    RealField c(g, 3);
    for (auto& v : c.comp[0]) v = 1.0;
    FieldEvaluator b(fft_forward(c));
    TracerOptions opt;
    opt.s_max = 10.0;
    FieldLine line = trace_field_line(b, {0.0, 1.0, 2.0}, opt);
    CHECK(line.reason == FieldLine::Termination::ArcBudget);
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      const double expect = std::fmod(line.s[i], g->L());
      CHECK(std::abs(std::remainder(line.points[i][0] - expect, g->L())) < 1e-8);
      CHECK(line.points[i][1] == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(line.points[i][2] == doctest::Approx(2.0).epsilon(1e-10));
    }
  }
  SUBCASE("periodic rotation field: lines conserve the stream function and close") {
    // b = (-sin(y - pi), sin(x - pi), 0): integral curves are level sets of
    // H = cos(x - pi) + cos(y - pi); near the center they are circles
    RealField br(g, 3);
    RealField x = coordinates(g, 0), y = coordinates(g, 1);
    const double c = 0.5 * g->L();
    for (std::size_t i = 0; i < g->real_size(); ++i) {
      br.comp[0][i] = -std::sin(y.comp[0][i] - c);
      br.comp[1][i] = std::sin(x.comp[0][i] - c);
    }
    FieldEvaluator b(fft_forward(br));
    TracerOptions opt;
    opt.s_max = 16.0;  // the r = 0.5 orbit has period ~ 2 pi r / sin(r) ~ 6.6
    opt.tol = 1e-9;
    opt.max_step = 0.05;
    const std::array<double, 3> seed{c + 0.5, c, 1.0};
    FieldLine line = trace_field_line(b, seed, opt);
    auto H = [&](const std::array<double, 3>& q) {
      return std::cos(q[0] - c) + std::cos(q[1] - c);
    };
    const double H0 = H(seed);
    double closest_after_half = 1e300;
    for (std::size_t i = 1; i < line.points.size(); ++i) {
      CHECK(std::abs(H(line.points[i]) - H0) < 1e-7);
      if (line.s[i] > 5.0) {
        double d = 0.0;
        for (int a = 0; a < 3; ++a) {
          const double dd = std::remainder(line.points[i][a] - seed[a], g->L());
          d += dd * dd;
        }
        closest_after_half = std::min(closest_after_half, std::sqrt(d));
      }
    }
    CHECK(closest_after_half < 2e-2);  // the orbit closes to sample resolution
    // segment-level distance: the polyline passes through the seed
    double seg_best = 1e300;
    for (std::size_t i = 1; i + 1 < line.points.size(); ++i) {
      if (line.s[i] < 5.0) continue;
      const auto& pA = line.points[i];
      const auto& pB = line.points[i + 1];
      double ab2 = 0.0, at_dot = 0.0;
      double ab[3], as[3];
      for (int a = 0; a < 3; ++a) {
        ab[a] = std::remainder(pB[a] - pA[a], g->L());
        as[a] = std::remainder(seed[a] - pA[a], g->L());
        ab2 += ab[a] * ab[a];
        at_dot += ab[a] * as[a];
      }
      const double t = std::clamp(ab2 > 0 ? at_dot / ab2 : 0.0, 0.0, 1.0);
      double d2 = 0.0;
      for (int a = 0; a < 3; ++a) {
        const double dd = as[a] - t * ab[a];
        d2 += dd * dd;
      }
      seg_best = std::min(seg_best, std::sqrt(d2));
    }
    CHECK(seg_best < 1e-3);
    CHECK(line.points.back()[2] == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("ABC(1,0,0): planes z = const are invariant") {
    FieldEvaluator b(abc_beltrami({1.0, 0.0, 0.0, 1}, g));
    TracerOptions opt;
    opt.s_max = 20.0;
    FieldLine line = trace_field_line(b, {1.0, 2.0, 0.7}, opt);
    for (const auto& pt : line.points) CHECK(std::abs(pt[2] - 0.7) < 1e-8);
  }
  SUBCASE("independent residual re-check") {
    FieldEvaluator b(abc_beltrami({1.0, 0.7, 0.43, 1}, g));
    TracerOptions opt;
    opt.s_max = 8.0;
    opt.tol = 1e-9;
    FieldLine line = trace_field_line(b, {0.9, 2.2, 4.4}, opt);
    CHECK(field_line_residual(b, line) < 1e-6);
  }
  SUBCASE("tracer stops near a null") {
    ReconnectionFields f = build_reconnection_data({0.0, 1.0, 0.0}, g, PhysicalParams{});
    FieldEvaluator b(f.perturbation_curl);
    TracerOptions opt;
    opt.s_max = 100.0;
    opt.null_tol = 1e-4;
    // seed on the stable axis of the saddle: the line flows into the null
    const double c = 0.5 * g->L();
    FieldLine line = trace_field_line(b, {c, c, c + 0.4}, opt);
    CHECK(line.reason == FieldLine::Termination::NullProximity);
  }
}

TEST_CASE("flow map integration") {
  auto g = make_grid(3, 16);
  SUBCASE("uniform velocity: exact translation, identity deformation") {
    RealField vr(g, 3);
    for (auto& v : vr.comp[0]) v = 0.3;
    for (auto& v : vr.comp[1]) v = -0.1;
    SpectralField V = fft_forward(vr);
    FlowMapIntegrator fm(g, lattice_seeds(g, 8));
    fm.begin(V);
    for (int i = 0; i < 10; ++i) fm.advance(V, 0.05);
    for (std::size_t i = 0; i < fm.seeds().size(); ++i) {
      const auto& s = fm.seeds()[i];
      const auto& x = fm.positions()[i];
      CHECK(std::abs(std::remainder(x[0] - (s[0] + 0.15), g->L())) < 1e-12);
      CHECK(std::abs(std::remainder(x[1] - (s[1] - 0.05), g->L())) < 1e-12);
      const auto& G = fm.deformation()[i];
      for (int a = 0; a < 3; ++a)
        for (int b2 = 0; b2 < 3; ++b2)
          CHECK(G[a * 3 + b2] == doctest::Approx(a == b2 ? 1.0 : 0.0).epsilon(1e-12));
    }
    CHECK(fm.excluded_count() == 0);
  }
  SUBCASE("v = 0: transport formula reduces to b_final = b0") {
    Rng rng(5);
    SpectralField b0 = random_solenoidal(g, rng, 1.5);
    FlowMapIntegrator fm(g, lattice_seeds(g, 27));
    SpectralField zero(g, 3);
    fm.begin(zero);
    for (int i = 0; i < 5; ++i) fm.advance(zero, 0.1);
    CHECK(fm.transport_residual(b0, b0) == 0.0);
    SpectralField perturbed = b0;
    perturbed *= 1.01;
    CHECK(fm.transport_residual(b0, perturbed) == doctest::Approx(0.01).epsilon(1e-6));
  }
}

TEST_CASE("topology report") {
  auto g = make_grid(3, 32);
  SUBCASE("identical fields: no certificate") {
    SpectralField B = abc_beltrami({1.0, 0.1, 0.1, 2}, g);
    TopologyReport rep = topology_report(B, B);
    CHECK_FALSE(rep.certificate);
    CHECK(rep.hyperbolic_t0 == rep.hyperbolic_t1);
  }
  SUBCASE("null-free versus one hyperbolic null: certificate issued") {
    SpectralField nofree = abc_beltrami({1.0, 0.1, 0.1, 2}, g);
    ReconnectionFields f = build_reconnection_data({0.0, 1.0, 0.0}, g, PhysicalParams{});
    TopologyReport rep = topology_report(nofree, f.perturbation_curl);
    CHECK(rep.certificate);
    CHECK(rep.hyperbolic_t0 == 0);
    CHECK(rep.hyperbolic_t1 >= 1);
    const std::string text = rep.text("t=0", "t=T");
    CHECK(text.find("RECONNECTION CERTIFICATE") != std::string::npos);
  }
}
