#include "harness/manifest.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace smhd {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

Manifest::Manifest(std::string outdir, std::string config_dump)
    : outdir_(std::move(outdir)), config_dump_(std::move(config_dump)),
      hash_(fnv1a64(config_dump_)) {}

void Manifest::add(const std::string& file, const std::string& module,
                   const std::string& operation) {
  entries_.push_back({file, module, operation});
}

void Manifest::write() const {
  nlohmann::json j;
  std::ostringstream hx;
  hx << std::hex << std::setfill('0') << std::setw(16) << hash_;
  j["config_hash"] = hx.str();
  j["config"] = config_dump_;
  j["artifacts"] = nlohmann::json::array();
  for (const auto& e : entries_)
    j["artifacts"].push_back({{"file", e.file}, {"module", e.module}, {"operation", e.operation}});
  std::ofstream os(outdir_ + "/manifest.json");
  if (!os) throw std::runtime_error("Manifest: cannot write to " + outdir_);
  os << j.dump(2) << "\n";
}

}  // namespace smhd
