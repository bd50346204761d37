#pragma once

#include "reconnect/nulls.hpp"
#include "reconnect/tracer.hpp"

namespace smhd {

// Null census of two magnetic snapshots plus a qualitative line portrait.
// A reconnection certificate is issued when the hyperbolic-null counts
// differ: a homeomorphism maps equilibria of the line field to equilibria,
// so a changed count obstructs topological equivalence.
struct TopologyOptions {
  NullSearchOptions nulls;
  int portrait_seeds = 0;  // 0 disables line portraits
  TracerOptions tracer;
};

struct TopologyReport {
  std::vector<NullPoint> nulls_t0;
  std::vector<NullPoint> nulls_t1;
  int hyperbolic_t0 = 0;
  int hyperbolic_t1 = 0;
  bool certificate = false;
  std::vector<FieldLine> lines_t0;
  std::vector<FieldLine> lines_t1;

  std::string text(const std::string& label0, const std::string& label1) const;
};

TopologyReport topology_report(const SpectralField& b_at_t0, const SpectralField& b_at_t1,
                               const TopologyOptions& opt = {});

}  // namespace smhd
