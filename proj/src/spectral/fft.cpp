#include "spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace smhd {
namespace fft {

std::size_t spectral_size(int dim, int n) {
  std::size_t s = static_cast<std::size_t>(n) / 2 + 1;
  for (int d = 1; d < dim; ++d) s *= static_cast<std::size_t>(n);
  return s;
}

std::size_t real_size(int dim, int n) {
  std::size_t s = 1;
  for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(n);
  return s;
}

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;
};

std::mutex planner_mutex;
std::map<std::pair<int, int>, PlanPair> plan_cache;

PlanPair& plans_for(int dim, int n) {
  std::lock_guard<std::mutex> lock(planner_mutex);
  auto key = std::make_pair(dim, n);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;

  std::vector<double> rbuf(real_size(dim, n));
  std::vector<std::complex<double>> cbuf(spectral_size(dim, n));
  std::vector<int> shape(dim, n);
  PlanPair p;
  // FFTW_UNALIGNED: plans are executed later on caller-owned buffers.
  p.fwd = fftw_plan_dft_r2c(dim, shape.data(), rbuf.data(),
                            reinterpret_cast<fftw_complex*>(cbuf.data()),
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.inv = fftw_plan_dft_c2r(dim, shape.data(),
                            reinterpret_cast<fftw_complex*>(cbuf.data()),
                            rbuf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p.fwd || !p.inv) throw std::runtime_error("fftw planning failed");
  return plan_cache.emplace(key, p).first->second;
}

}  // namespace

void forward(int dim, int n, const double* in, std::complex<double>* out) {
  PlanPair& p = plans_for(dim, n);
  // r2c with FFTW_ESTIMATE does not modify its input.
  fftw_execute_dft_r2c(p.fwd, const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void inverse(int dim, int n, const std::complex<double>* in, double* out) {
  PlanPair& p = plans_for(dim, n);
  // c2r destroys its input for dim > 1, so transform a copy.
  std::vector<std::complex<double>> tmp(in, in + spectral_size(dim, n));
  fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(tmp.data()), out);
  const double scale = 1.0 / static_cast<double>(real_size(dim, n));
  const std::size_t nr = real_size(dim, n);
  for (std::size_t i = 0; i < nr; ++i) out[i] *= scale;
}

}  // namespace fft
}  // namespace smhd
