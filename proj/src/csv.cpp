#include "locbmo/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace locbmo {

CsvWriter::CsvWriter(const std::string& path, const std::string& config_hash,
                     const std::vector<std::string>& columns)
    : out_(path), width_(columns.size()) {
  if (!out_) throw std::runtime_error("csv: cannot open " + path);
  out_ << "# config_hash=" << config_hash << "\n";
  for (size_t i = 0; i < columns.size(); ++i)
    out_ << columns[i] << (i + 1 == columns.size() ? "\n" : ",");
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::runtime_error("csv: column count mismatch");
  for (size_t i = 0; i < cells.size(); ++i)
    out_ << cells[i] << (i + 1 == cells.size() ? "\n" : ",");
}

std::string CsvWriter::num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string CsvWriter::num(int v) { return std::to_string(v); }

}  // namespace locbmo
