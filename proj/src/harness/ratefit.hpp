#pragma once

#include <string>
#include <vector>

namespace smhd {

// Least-squares fit of log(e) against log(nu).
struct RateFit {
  std::string name;
  std::vector<double> nu;
  std::vector<double> err;
  double slope = 0.0;
  double intercept = 0.0;   // log-space intercept
  double residual = 0.0;    // RMS of log residuals
  double target = 0.0;      // expected exponent, for reporting
};

RateFit fit_rate(const std::string& name, const std::vector<double>& nu,
                 const std::vector<double>& err, double target_exponent);

}  // namespace smhd
