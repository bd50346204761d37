#include "harness/runners.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <thread>

#include "besov/bony.hpp"
#include "besov/inequalities.hpp"
#include "harness/csvout.hpp"
#include "harness/manifest.hpp"
#include "harness/recipes.hpp"
#include "mhd/diagnostics.hpp"
#include "mhd/ledger.hpp"
#include "mhd/stepper.hpp"
#include "reconnect/topology.hpp"
#include "spectral/random.hpp"
#include "spectral/snapshot.hpp"

namespace smhd {

namespace {

namespace fs = std::filesystem;

struct TimeGrid {
  double dt;
  int nsteps;
  int stride;
};

// fixed dt honoring the advective CFL bound of the initial data, with the
// step count padded to a whole number of sample strides
TimeGrid make_time_grid(const ExperimentConfig& cfg, double cfl_bound) {
  double dt = cfg.dt;
  if (dt <= 0.0) dt = 0.5 * cfl_bound;
  int nsteps = std::max(1, static_cast<int>(std::ceil(cfg.t_final / dt - 1e-12)));
  const int stride = std::min(cfg.sample_stride, nsteps);
  nsteps = ((nsteps + stride - 1) / stride) * stride;
  dt = cfg.t_final / nsteps;
  return {dt, nsteps, stride};
}

std::string member_dir(const std::string& outdir, double lambda) {
  std::ostringstream os;
  os << outdir << "/lambda_" << CsvWriter::num(lambda);
  return os.str();
}

void write_norm_series(const std::string& path, const EnergyLedger& led) {
  CsvWriter csv(path, {"time", "norm_name", "value"});
  for (std::size_t i = 0; i < led.times().size(); ++i)
    for (const auto& [name, value] : led.samples()[i])
      csv.row({CsvWriter::num(led.times()[i]), name, CsvWriter::num(value)});
}

}  // namespace

RunResult run_simulation(const ExperimentConfig& cfg, bool compressible) {
  RunResult res;
  try {
    cfg.validate("simulate");
  } catch (const ConfigError& e) {
    res.exit_code = kConfigError;
    res.message = e.what();
    return res;
  }
  fs::create_directories(cfg.outdir);
  Manifest manifest(cfg.outdir, cfg.dump(compressible ? "simulate-cmhd" : "simulate-imhd"));
  GridPtr g = make_grid(cfg.dim, cfg.n, cfg.box_length);
  InitialData data = build_initial_data(cfg, g);
  auto part = std::make_shared<const DyadicPartition>(DyadicPartition::derive(g));
  const double sigma = 0.5 * cfg.dim - 1.0;
  const BesovIndex bs{sigma, 2.0, 1.0};

  try {
    CsvWriter csv(cfg.outdir + "/norms.csv", {"time", "norm_name", "value"});
    manifest.add("norms.csv", "experiment-harness", "run_simulation");
    const double mass0 = compressible ? mean(data.a0) : 0.0;

    if (compressible) {
      CompressibleState s{0.0, data.a0, data.v0, data.b0};
      const double bound = CompressibleStepper::cfl_limit(s, cfg.params, cfg.cfl);
      TimeGrid tg = make_time_grid(cfg, bound);
      CompressibleStepper st(g, cfg.params, tg.dt);
      auto sample = [&](const CompressibleState& sc) {
        csv.row({CsvWriter::num(sc.time), "a_crit",
                 CsvWriter::num(besov_norm(sc.a, {0.5 * cfg.dim, 2.0, 1.0}, *part))});
        csv.row({CsvWriter::num(sc.time), "v_sigma", CsvWriter::num(besov_norm(sc.v, bs, *part))});
        csv.row({CsvWriter::num(sc.time), "b_sigma", CsvWriter::num(besov_norm(sc.b, bs, *part))});
        csv.row({CsvWriter::num(sc.time), "div_b_rel", CsvWriter::num(relative_divergence(sc.b))});
        res.max_div_b = std::max(res.max_div_b, relative_divergence(sc.b));
        res.mass_drift = std::max(res.mass_drift, std::abs(mean(sc.a) - mass0));
      };
      sample(s);
      for (int i = 1; i <= tg.nsteps; ++i) {
        s = st.advance(s);
        if (i % tg.stride == 0) sample(s);
        if (cfg.checkpoint_stride > 0 && i % cfg.checkpoint_stride == 0) {
          SpectralField state(g, 1 + 2 * cfg.dim);
          state.comp(0) = s.a.comp(0);
          for (int c = 0; c < cfg.dim; ++c) {
            state.comp(1 + c) = s.v.comp(c);
            state.comp(1 + cfg.dim + c) = s.b.comp(c);
          }
          char name[64];
          std::snprintf(name, sizeof(name), "state_%06d.snap", i);
          write_snapshot(cfg.outdir + "/" + name, state, s.time);
          manifest.add(name, "spectral-core", "write_snapshot");
        }
      }
      res.final_time = s.time;
    } else {
      IncompressibleState s{0.0, leray_P(data.v0), leray_P(data.b0)};
      const double bound = IncompressibleStepper::cfl_limit(s, cfg.params, cfg.cfl);
      TimeGrid tg = make_time_grid(cfg, bound);
      IncompressibleStepper st(g, cfg.params, tg.dt);
      EnergyBalanceTracker energy(cfg.params);
      auto sample = [&](const IncompressibleState& si) {
        csv.row({CsvWriter::num(si.time), "V_sigma", CsvWriter::num(besov_norm(si.V, bs, *part))});
        csv.row({CsvWriter::num(si.time), "B_sigma", CsvWriter::num(besov_norm(si.B, bs, *part))});
        csv.row({CsvWriter::num(si.time), "energy",
                 CsvWriter::num(l2_norm(si.V) * l2_norm(si.V) + l2_norm(si.B) * l2_norm(si.B))});
        res.max_div_b = std::max(res.max_div_b, relative_divergence(si.B));
      };
      energy.observe(s);
      sample(s);
      for (int i = 1; i <= tg.nsteps; ++i) {
        s = st.step(s);
        energy.observe(s);
        if (i % tg.stride == 0) sample(s);
      }
      res.final_time = s.time;
      res.energy_residual = energy.residual();
    }
    manifest.write();
  } catch (const DensityFloorError& e) {
    res.exit_code = kNumericalFailure;
    res.message = e.what();
    return res;
  } catch (const CflError& e) {
    res.exit_code = kNumericalFailure;
    res.message = e.what();
    return res;
  }
  if (res.max_div_b > 1e-8 || res.mass_drift > 1e-10) {
    res.exit_code = kInvariantBreach;
    res.message = "solver invariant breached (div b or mass conservation)";
  }
  return res;
}

RunResult run_sweep(const ExperimentConfig& cfg) {
  RunResult res;
  try {
    cfg.validate("sweep");
  } catch (const ConfigError& e) {
    res.exit_code = kConfigError;
    res.message = e.what();
    return res;
  }
  fs::create_directories(cfg.outdir);
  Manifest manifest(cfg.outdir, cfg.dump("sweep"));
  GridPtr g = make_grid(cfg.dim, cfg.n, cfg.box_length);
  InitialData data = build_initial_data(cfg, g);
  // the rate statement's hypothesis
  if (l2_norm(data.a0) > 0.0) {
    res.exit_code = kConfigError;
    res.message = "sweep requires a0 = 0";
    return res;
  }
  auto part = std::make_shared<const DyadicPartition>(DyadicPartition::derive(g));

  // one time grid for every member and the reference
  CompressibleState probe{0.0, data.a0, data.v0, data.b0};
  const double bound = CompressibleStepper::cfl_limit(probe, cfg.params, cfg.cfl);
  const TimeGrid tg = make_time_grid(cfg, bound);
  const int nsamples = tg.nsteps / tg.stride + 1;

  // ---- reference incompressible run, integrated once and cached ----
  struct RefSample {
    double time;
    SpectralField V, B, V_t, B_t;
  };
  std::vector<RefSample> ref;
  ref.reserve(static_cast<std::size_t>(nsamples));
  ReferenceLedger ref_ledger(g, cfg.params, part);
  EnergyBalanceTracker energy(cfg.params);
  {
    IncompressibleState s{0.0, leray_P(data.v0), leray_P(data.b0)};
    IncompressibleStepper st(g, cfg.params, tg.dt);
    auto sample = [&](const IncompressibleState& si) {
      IncompressibleRhs r = rhs_imhd(si, cfg.params);
      ref.push_back({si.time, si.V, si.B, r.V_t, r.B_t});
      ref_ledger.add_sample(si, r.V_t, r.B_t);
    };
    energy.observe(s);
    sample(s);
    for (int i = 1; i <= tg.nsteps; ++i) {
      s = st.step(s);
      energy.observe(s);
      if (i % tg.stride == 0) sample(s);
    }
  }
  res.energy_residual = energy.residual();
  res.measured_M = ref_ledger.measured_M();
  res.vscript = ref_ledger.vscript();

  // ---- members ----
  struct MemberOut {
    bool ok = false;
    std::string error;
    std::unique_ptr<EnergyLedger> ledger;
    double max_div_b = 0.0;
  };
  std::vector<MemberOut> outs(cfg.lambdas.size());
  auto run_member = [&](std::size_t mi) {
    MemberOut& mo = outs[mi];
    PhysicalParams mp = cfg.params;
    mp.lambda = cfg.lambdas[mi];
    try {
      CompressibleState s{0.0, data.a0, data.v0, data.b0};
      CompressibleStepper st(g, mp, tg.dt);
      mo.ledger = std::make_unique<EnergyLedger>(g, mp, part);
      auto sample = [&](const CompressibleState& sc, std::size_t sample_idx) {
        const RefSample& rs = ref[sample_idx];
        IncompressibleState ris{rs.time, rs.V, rs.B};
        DifferenceState d = difference_state(sc, ris);
        CompressibleRhs rc = rhs_cmhd(sc, mp);
        SpectralField u_t = rc.v_t - rs.V_t;
        SpectralField h_t = rc.b_t - rs.B_t;
        mo.ledger->add_sample(d, rc.a_t, u_t, h_t);
        mo.max_div_b = std::max(mo.max_div_b, relative_divergence(sc.b));
      };
      sample(s, 0);
      std::size_t sample_idx = 1;
      for (int i = 1; i <= tg.nsteps; ++i) {
        s = st.advance(s);
        if (i % tg.stride == 0) sample(s, sample_idx++);
      }
      mo.ok = true;
    } catch (const std::exception& e) {
      mo.ok = false;
      mo.error = e.what();
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(cfg.workers > 0 ? cfg.workers : hw, cfg.lambdas.size());
  std::size_t next = 0;
  while (next < cfg.lambdas.size()) {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers && next < cfg.lambdas.size(); ++w, ++next)
      pool.emplace_back(run_member, next);
    for (auto& t : pool) t.join();
  }

  for (std::size_t mi = 0; mi < cfg.lambdas.size(); ++mi) {
    if (!outs[mi].ok) {
      res.exit_code = kNumericalFailure;
      res.message = "sweep member lambda = " + CsvWriter::num(cfg.lambdas[mi]) +
                    " failed: " + outs[mi].error;
      return res;
    }
  }

  // ---- artifacts and fits ----
  std::vector<double> nus;
  for (double l : cfg.lambdas) nus.push_back(l + 2.0 * cfg.params.mu);
  auto collect_sup = [&](const char* ch) {
    std::vector<double> v;
    for (auto& mo : outs) v.push_back(mo.ledger->sup(ch));
    return v;
  };
  auto collect_int = [&](const char* ch) {
    std::vector<double> v;
    for (auto& mo : outs) v.push_back(mo.ledger->integral(ch));
    return v;
  };

  res.member_channels["pu"] = collect_sup("pu");
  res.member_channels["h"] = collect_sup("h");
  res.member_channels["a_crit"] = collect_sup("a_crit");
  res.member_channels["qu"] = collect_sup("qu");
  res.member_channels["X"] = collect_sup("X");
  res.member_channels["Y"] = collect_int("Y");
  res.member_channels["Z"] = collect_sup("Z");
  res.member_channels["W"] = collect_int("W");
  res.member_channels["diss_pu"] = collect_int("diss_pu");
  res.member_channels["diss_h"] = collect_int("diss_h");
  // the sqrt(nu/mu)-weighted density channel of the convergence estimate
  std::vector<double> weighted_density(nus.size());
  for (std::size_t i = 0; i < nus.size(); ++i)
    weighted_density[i] = std::sqrt(nus[i] / cfg.params.mu) * res.member_channels["a_crit"][i];
  res.member_channels["weighted_density"] = weighted_density;

  res.fits.push_back(fit_rate("Pv_minus_V_LinfB", nus, res.member_channels["pu"], -0.5));
  res.fits.push_back(fit_rate("b_minus_B_LinfB", nus, res.member_channels["h"], -0.5));
  res.fits.push_back(fit_rate("density_LinfBcrit", nus, res.member_channels["a_crit"], -1.0));
  res.fits.push_back(fit_rate("diss_pu_L1B", nus, res.member_channels["diss_pu"], -0.5));
  res.fits.push_back(fit_rate("diss_h_L1B", nus, res.member_channels["diss_h"], -0.5));
  res.fits.push_back(fit_rate("weighted_density", nus, weighted_density, -0.5));

  CsvWriter rates(cfg.outdir + "/rates.csv", {"norm_name", "nu", "error"});
  manifest.add("rates.csv", "experiment-harness", "run_sweep");
  for (const auto& f : res.fits)
    for (std::size_t i = 0; i < f.nu.size(); ++i)
      rates.row({f.name, CsvWriter::num(f.nu[i]), CsvWriter::num(f.err[i])});
  CsvWriter fits(cfg.outdir + "/fits.csv",
                 {"norm_name", "slope", "intercept", "residual", "target"});
  manifest.add("fits.csv", "experiment-harness", "fit_rate");
  for (const auto& f : res.fits)
    fits.row({f.name, CsvWriter::num(f.slope), CsvWriter::num(f.intercept),
              CsvWriter::num(f.residual), CsvWriter::num(f.target)});
  CsvWriter regime(cfg.outdir + "/regime.csv", {"quantity", "value"});
  manifest.add("regime.csv", "experiment-harness", "run_sweep");
  regime.row({"measured_M", CsvWriter::num(res.measured_M)});
  regime.row({"vscript", CsvWriter::num(res.vscript)});
  regime.row({"reference_energy_residual", CsvWriter::num(res.energy_residual)});
  for (std::size_t mi = 0; mi < cfg.lambdas.size(); ++mi) {
    const std::string dir = member_dir(cfg.outdir, cfg.lambdas[mi]);
    fs::create_directories(dir);
    write_norm_series(dir + "/norms.csv", *outs[mi].ledger);
    manifest.add(dir + "/norms.csv", "mhd-dynamics", "update_energy_ledger");
  }
  manifest.write();
  return res;
}

RunResult run_reconnection(const ExperimentConfig& cfg) {
  RunResult res;
  try {
    cfg.validate("reconnect");
  } catch (const ConfigError& e) {
    res.exit_code = kConfigError;
    res.message = e.what();
    return res;
  }
  fs::create_directories(cfg.outdir);
  Manifest manifest(cfg.outdir, cfg.dump("reconnect"));
  GridPtr g = make_grid(3, cfg.n, cfg.box_length);
  PhysicalParams p = cfg.params;
  p.lambda = cfg.recon_lambda;
  ReconnectionFields f = build_reconnection_data(cfg.recon, g, p);
  res.epsilon_warning = f.epsilon_warning;

  CompressibleState s{0.0, SpectralField(g, 1), f.V0, f.B0};
  try {
    const double bound = CompressibleStepper::cfl_limit(s, p, cfg.cfl);
    ExperimentConfig tcfg = cfg;
    tcfg.t_final = cfg.recon.T;
    const TimeGrid tg = make_time_grid(tcfg, bound);
    CompressibleStepper st(g, p, tg.dt);
    for (int i = 1; i <= tg.nsteps; ++i) {
      s = st.advance(s);
      res.max_div_b = std::max(res.max_div_b, relative_divergence(s.b));
    }
  } catch (const std::exception& e) {
    res.exit_code = kNumericalFailure;
    res.message = e.what();
    return res;
  }

  TopologyOptions topt;
  topt.portrait_seeds = cfg.portrait_seeds;
  topt.tracer.s_max = 25.0;
  TopologyReport rep = topology_report(f.B0, s.b, topt);
  res.certificate = rep.certificate;
  res.hyperbolic_t0 = rep.hyperbolic_t0;
  res.hyperbolic_t1 = rep.hyperbolic_t1;

  {
    std::ofstream os(cfg.outdir + "/certificate.txt");
    os << rep.text("b at t = 0", "b at t = " + CsvWriter::num(cfg.recon.T));
    if (res.epsilon_warning)
      os << "  note: epsilon exceeds the N^{-r-1} smallness guidance (desk-scale run)\n";
    manifest.add("certificate.txt", "reconnection-lab", "topology_report");
  }
  CsvWriter nulls(cfg.outdir + "/nulls.csv",
                  {"snapshot", "x", "y", "z", "eig_re_1", "eig_re_2", "eig_re_3",
                   "eig_im_1", "eig_im_2", "eig_im_3", "class"});
  manifest.add("nulls.csv", "reconnection-lab", "find_nulls");
  auto dump_nulls = [&](const char* tag, const std::vector<NullPoint>& list) {
    for (const auto& np : list)
      nulls.row({tag, CsvWriter::num(np.location[0]), CsvWriter::num(np.location[1]),
                 CsvWriter::num(np.location[2]), CsvWriter::num(np.eigenvalues[0].real()),
                 CsvWriter::num(np.eigenvalues[1].real()), CsvWriter::num(np.eigenvalues[2].real()),
                 CsvWriter::num(np.eigenvalues[0].imag()), CsvWriter::num(np.eigenvalues[1].imag()),
                 CsvWriter::num(np.eigenvalues[2].imag()),
                 np.hyperbolic ? "hyperbolic" : "degenerate"});
  };
  dump_nulls("t0", rep.nulls_t0);
  dump_nulls("t1", rep.nulls_t1);
  CsvWriter lines(cfg.outdir + "/field_lines.csv", {"snapshot", "line_id", "s", "x", "y", "z"});
  manifest.add("field_lines.csv", "reconnection-lab", "trace_field_line");
  auto dump_lines = [&](const char* tag, const std::vector<FieldLine>& ls) {
    for (std::size_t li = 0; li < ls.size(); ++li)
      for (std::size_t i = 0; i < ls[li].points.size(); ++i)
        lines.row({tag, std::to_string(li), CsvWriter::num(ls[li].s[i]),
                   CsvWriter::num(ls[li].points[i][0]), CsvWriter::num(ls[li].points[i][1]),
                   CsvWriter::num(ls[li].points[i][2])});
  };
  dump_lines("t0", rep.lines_t0);
  dump_lines("t1", rep.lines_t1);
  write_snapshot(cfg.outdir + "/b_initial.snap", f.B0, 0.0);
  write_snapshot(cfg.outdir + "/b_final.snap", s.b, s.time);
  manifest.add("b_initial.snap", "spectral-core", "write_snapshot");
  manifest.add("b_final.snap", "spectral-core", "write_snapshot");
  manifest.write();
  if (res.max_div_b > 1e-8) {
    res.exit_code = kInvariantBreach;
    res.message = "div b drifted during the reconnection run";
  }
  return res;
}

RunResult run_besov_checks(const ExperimentConfig& cfg) {
  RunResult res;
  try {
    cfg.validate("besov-check");
  } catch (const ConfigError& e) {
    res.exit_code = kConfigError;
    res.message = e.what();
    return res;
  }
  fs::create_directories(cfg.outdir);
  Manifest manifest(cfg.outdir, cfg.dump("besov-check"));
  GridPtr g = make_grid(cfg.dim, cfg.n, cfg.box_length);
  DyadicPartition part = DyadicPartition::derive(g);
  Rng rng(cfg.rng_seed);

  auto& vals = res.check_values;
  vals["partition_defect"] = part.partition_defect();

  // Bony reconstruction, dealiased pieces against the dealiased product
  double bony_worst = 0.0;
  for (int trial = 0; trial < std::max(1, cfg.check_samples / 100); ++trial) {
    SpectralField a = random_scalar(g, rng, rng.uniform(0.5, 2.0));
    SpectralField b = random_scalar(g, rng, rng.uniform(0.5, 2.0));
    SpectralField sum = bony_paraproduct(a, b, part);
    sum += bony_paraproduct(b, a, part);
    sum += bony_remainder(a, b, part);
    SpectralField prod = multiply(a, b);
    bony_worst = std::max(bony_worst, l2_norm(sum - prod) / l2_norm(prod));
  }
  vals["bony_reconstruction"] = bony_worst;

  // Bernstein stability across interior bands (fully inside the retained
  // disk, dense mode population)
  {
    std::vector<int> bands;
    const auto& k2 = g->k2();
    for (int j = part.j_min(); j <= part.j_max(); ++j) {
      if ((8.0 / 3.0) * std::pow(2.0, j) > g->k_max_dealiased()) continue;
      int count = 0;
      const auto& w = part.band_weight(j);
      for (std::size_t i = 0; i < k2.size(); ++i)
        if (w[i] > 1e-14) ++count;
      if (count >= 256) bands.push_back(j);
    }
    double hi = 0.0, lo = 1e300;
    for (int j : bands) {
      double worst = 0.0;
      for (int trial = 0; trial < cfg.bernstein_samples; ++trial) {
        SpectralField f = dyadic_block(random_scalar(g, rng, rng.uniform(0.0, 2.0)), part, j);
        if (l2_norm(f) < 1e-12) continue;
        worst = std::max(worst, check_bernstein(f, part, j, 1, 2.0, 2.0).forward);
      }
      hi = std::max(hi, worst);
      lo = std::min(lo, worst);
    }
    vals["bernstein_band_variation"] = bands.size() >= 2 ? (hi - lo) / hi : 0.0;
    vals["bernstein_max_ratio"] = hi;
  }

  // K-functional (paper constant 4) and the embedding constant
  double kworst = 0.0, eworst = 0.0, iworst = 0.0, pworst = 0.0;
  for (int trial = 0; trial < cfg.check_samples; ++trial) {
    SpectralField f = random_scalar(g, rng, rng.uniform(0.0, 2.5));
    kworst = std::max(kworst, check_k_functional(f, part));
    eworst = std::max(eworst, check_embedding(f, part));
    iworst = std::max(iworst, check_interpolation(f, part));
  }
  for (int trial = 0; trial < std::max(1, cfg.check_samples / 20); ++trial) {
    SpectralField a = random_scalar(g, rng, rng.uniform(0.5, 2.0));
    SpectralField b = random_scalar(g, rng, rng.uniform(0.5, 2.0));
    pworst = std::max(pworst, check_product_law(a, b, 0.6, 0.7, part));
  }
  vals["k_functional_max"] = kworst;
  vals["embedding_max"] = eworst;
  vals["interpolation_max"] = iworst;
  vals["product_law_max"] = pworst;

  // Minkowski on random series
  double mink_margin = 0.0;
  for (int trial = 0; trial < std::max(1, cfg.check_samples / 100); ++trial) {
    std::vector<SpectralField> series;
    for (int i = 0; i < 5; ++i) series.push_back(random_scalar(g, rng, rng.uniform(0.5, 2.0)));
    const BesovIndex idx{0.4, 2.0, 1.0};
    for (double rt : {1.0, 2.0}) {
      const double cl = chemin_lerner_norm(series, 0.1, idx, rt, part);
      const double plain = time_lr_besov_norm(series, 0.1, idx, rt, part);
      mink_margin = std::max(mink_margin, (plain - cl) / std::max(plain, 1e-300));
    }
  }
  vals["minkowski_violation"] = std::max(0.0, mink_margin);

  const bool pass = vals["partition_defect"] < 1e-12 && vals["bony_reconstruction"] < 1e-8 &&
                    vals["bernstein_band_variation"] < 0.05 && vals["k_functional_max"] <= 1.0 &&
                    vals["minkowski_violation"] <= 1e-12;
  res.checks_passed = pass;

  CsvWriter csv(cfg.outdir + "/besov_report.csv", {"check", "value"});
  manifest.add("besov_report.csv", "besov-analysis", "run_besov_checks");
  for (const auto& [k, v] : vals) csv.row({k, CsvWriter::num(v)});
  manifest.write();
  if (!pass) {
    res.exit_code = kInvariantBreach;
    res.message = "besov property suite failed";
  }
  return res;
}

}  // namespace smhd
