#pragma once

#include "reconnect/eval.hpp"

namespace smhd {

// Integral curve of a frozen-time magnetic field, d gamma / ds = b(gamma).
struct FieldLine {
  enum class Termination { ArcBudget, NullProximity, StepUnderflow, SampleBudget };
  std::vector<double> s;
  std::vector<std::array<double, 3>> points;  // wrapped into [0, L)
  Termination reason = Termination::ArcBudget;
};

struct TracerOptions {
  double s_max = 50.0;
  double tol = 1e-8;        // local error per unit arc
  double null_tol = 1e-6;   // stop within this |b| (relative to max |b|)
  std::size_t max_samples = 200000;
  double h_init = 1e-2;
  double max_step = 1e300;  // cap for dense output
};

// Adaptive embedded Runge-Kutta 4(5) (Cash-Karp) with periodic wrapping.
FieldLine trace_field_line(const FieldEvaluator& b, const std::array<double, 3>& seed,
                           const TracerOptions& opt = {});

// Independent residual check: re-integrates every stored interval with four
// fixed RK4 substeps and returns the largest endpoint defect per unit arc.
double field_line_residual(const FieldEvaluator& b, const FieldLine& line);

}  // namespace smhd
