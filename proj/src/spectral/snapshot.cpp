#include "spectral/snapshot.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace smhd {

namespace {
constexpr char kMagic[8] = {'S', 'M', 'H', 'D', 'S', 'N', 'P', '\0'};
constexpr std::uint32_t kVersion = 1;

// This codebase targets little-endian hosts; the format is defined as
// little endian, so plain writes of the native representation are used.
template <typename T>
void put(std::ofstream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  return v;
}
}  // namespace

void write_snapshot(const std::string& path, const RealField& f, double time) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
  os.write(kMagic, sizeof(kMagic));
  put(os, kVersion);
  put(os, static_cast<std::uint32_t>(f.grid->dim()));
  put(os, static_cast<std::uint32_t>(f.grid->n()));
  put(os, f.grid->L());
  put(os, static_cast<std::uint32_t>(f.ncomp()));
  put(os, time);
  for (const auto& c : f.comp)
    os.write(reinterpret_cast<const char*>(c.data()),
             static_cast<std::streamsize>(c.size() * sizeof(double)));
  if (!os) throw std::runtime_error("write_snapshot: write failed for " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
  char magic[8];
  is.read(magic, sizeof(magic));
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("read_snapshot: bad magic in " + path);
  const auto version = get<std::uint32_t>(is);
  if (version != kVersion) throw std::runtime_error("read_snapshot: unsupported version");
  const int dim = static_cast<int>(get<std::uint32_t>(is));
  const int n = static_cast<int>(get<std::uint32_t>(is));
  const double L = get<double>(is);
  const int ncomp = static_cast<int>(get<std::uint32_t>(is));
  const double time = get<double>(is);
  Snapshot s;
  s.time = time;
  s.field = RealField(make_grid(dim, n, L), ncomp);
  for (auto& c : s.field.comp)
    is.read(reinterpret_cast<char*>(c.data()),
            static_cast<std::streamsize>(c.size() * sizeof(double)));
  if (!is) throw std::runtime_error("read_snapshot: truncated file " + path);
  return s;
}

void write_snapshot(const std::string& path, const SpectralField& F, double time) {
  write_snapshot(path, fft_inverse(F), time);
}

}  // namespace smhd
