#include "harness/csvout.hpp"

#include <cstdio>
#include <stdexcept>

namespace smhd {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), os_(path) {
  if (!os_) throw std::runtime_error("CsvWriter: cannot open " + path);
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os_ << ',';
    os_ << cells[i];
  }
  os_ << '\n';
}

std::string CsvWriter::num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace smhd
