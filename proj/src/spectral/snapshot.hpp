#pragma once

#include <string>

#include "spectral/field.hpp"

namespace smhd {

// Binary field snapshot. Layout (little endian):
//   magic   8 bytes  "SMHDSNP\0"
//   version u32      1
//   dim     u32
//   n       u32
//   L       f64
//   ncomp   u32
//   time    f64
//   data    ncomp * n^dim f64, row major, one component after another
void write_snapshot(const std::string& path, const RealField& f, double time);

struct Snapshot {
  RealField field;
  double time = 0.0;
};
Snapshot read_snapshot(const std::string& path);

// Convenience: spectral field is mirrored to real space before writing.
void write_snapshot(const std::string& path, const SpectralField& F, double time);

}  // namespace smhd
