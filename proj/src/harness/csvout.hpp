#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace smhd {

// Deterministic CSV emission: fixed %.17g formatting and caller-fixed row
// order, so identical runs produce byte-identical files.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  const std::string& path() const { return path_; }

  static std::string num(double v);

 private:
  std::string path_;
  std::ofstream os_;
};

}  // namespace smhd
