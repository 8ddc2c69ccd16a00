#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace locbmo {

/// Minimal deterministic CSV writer: a comment header echoing the config
/// hash, one header row, then value rows formatted with %.12g.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& config_hash,
            const std::vector<std::string>& columns);

  void row(const std::vector<std::string>& cells);

  static std::string num(double v);
  static std::string num(int v);

 private:
  std::ofstream out_;
  size_t width_;
};

}  // namespace locbmo
