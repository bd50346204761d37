#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace smhd {

// Run manifest: every emitted artifact is traceable to (config hash,
// module, operation). Written as JSON with no timestamps or other
// nondeterministic content.
class Manifest {
 public:
  Manifest(std::string outdir, std::string config_dump);
  void add(const std::string& file, const std::string& module, const std::string& operation);
  void write() const;
  std::uint64_t config_hash() const { return hash_; }

 private:
  std::string outdir_;
  std::string config_dump_;
  std::uint64_t hash_;
  struct Entry {
    std::string file, module, operation;
  };
  std::vector<Entry> entries_;
};

std::uint64_t fnv1a64(const std::string& s);

}  // namespace smhd
