#include "harness/ratefit.hpp"

#include <cmath>
#include <stdexcept>

namespace smhd {

RateFit fit_rate(const std::string& name, const std::vector<double>& nu,
                 const std::vector<double>& err, double target_exponent) {
  if (nu.size() != err.size() || nu.size() < 2)
    throw std::invalid_argument("fit_rate: need at least two (nu, err) samples");
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (!(nu[i] > 0.0) || !(err[i] > 0.0))
      throw std::invalid_argument("fit_rate: samples must be positive");

  RateFit f;
  f.name = name;
  f.nu = nu;
  f.err = err;
  f.target = target_exponent;

  const std::size_t n = nu.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(nu[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  f.slope = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::log(err[i]) - (f.intercept + f.slope * std::log(nu[i]));
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

}  // namespace smhd
