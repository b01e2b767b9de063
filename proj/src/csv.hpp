#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "common.hpp"

namespace sq {

// CSV writer with full round-trip ("%.17g") numeric formatting.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);

 private:
  std::ofstream out_;
  size_t columns_;
};

std::string format_g17(double v);

}  // namespace sq
