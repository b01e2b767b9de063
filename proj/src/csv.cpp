#include "csv.hpp"

#include <cstdio>

namespace sq {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : out_(path), columns_(header.size()) {
  require(out_.good(), ErrorCode::io_failure, "cannot open " + path);
  for (size_t i = 0; i < header.size(); ++i) {
    out_ << (i ? "," : "") << header[i];
  }
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  require(values.size() == columns_, ErrorCode::io_failure,
          "CSV row width does not match the header");
  for (size_t i = 0; i < values.size(); ++i) {
    out_ << (i ? "," : "") << format_g17(values[i]);
  }
  out_ << "\n";
  require(out_.good(), ErrorCode::io_failure, "CSV write failed");
}

}  // namespace sq
