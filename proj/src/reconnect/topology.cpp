#include "reconnect/topology.hpp"

#include <sstream>
#include <stdexcept>

#include "reconnect/alfven.hpp"

namespace smhd {

TopologyReport topology_report(const SpectralField& b_at_t0, const SpectralField& b_at_t1,
                               const TopologyOptions& opt) {
  if (!b_at_t0.grid().same_as(b_at_t1.grid()))
    throw std::invalid_argument("topology_report: grid mismatch");
  TopologyReport rep;
  rep.nulls_t0 = find_nulls(b_at_t0, opt.nulls);
  rep.nulls_t1 = find_nulls(b_at_t1, opt.nulls);
  rep.hyperbolic_t0 = hyperbolic_count(rep.nulls_t0);
  rep.hyperbolic_t1 = hyperbolic_count(rep.nulls_t1);
  rep.certificate = rep.hyperbolic_t0 != rep.hyperbolic_t1;
  if (opt.portrait_seeds > 0) {
    FieldEvaluator e0(b_at_t0);
    FieldEvaluator e1(b_at_t1);
    for (const auto& seed : lattice_seeds(b_at_t0.grid_ptr(), opt.portrait_seeds)) {
      rep.lines_t0.push_back(trace_field_line(e0, seed, opt.tracer));
      rep.lines_t1.push_back(trace_field_line(e1, seed, opt.tracer));
    }
  }
  return rep;
}

std::string TopologyReport::text(const std::string& label0, const std::string& label1) const {
  std::ostringstream os;
  os << "magnetic topology report\n";
  os << "  snapshot A: " << label0 << "\n";
  os << "  snapshot B: " << label1 << "\n";
  os << "  nulls A: " << nulls_t0.size() << " (hyperbolic " << hyperbolic_t0 << ")\n";
  os << "  nulls B: " << nulls_t1.size() << " (hyperbolic " << hyperbolic_t1 << ")\n";
  if (certificate) {
    os << "  RECONNECTION CERTIFICATE: hyperbolic-null count changed "
       << hyperbolic_t0 << " -> " << hyperbolic_t1
       << "; no homeomorphism can map the line fields onto each other\n";
  } else {
    os << "  no certificate: hyperbolic-null counts agree\n";
  }
  for (const auto& np : nulls_t1) {
    os << "    B-null at (" << np.location[0] << ", " << np.location[1] << ", "
       << np.location[2] << ") re(eig) = {" << np.eigenvalues[0].real() << ", "
       << np.eigenvalues[1].real() << ", " << np.eigenvalues[2].real() << "} "
       << (np.hyperbolic ? "hyperbolic" : "degenerate") << "\n";
  }
  return os.str();
}

}  // namespace smhd
