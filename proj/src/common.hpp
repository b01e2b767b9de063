#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sq {

using cplx = std::complex<double>;
constexpr double pi = 3.14159265358979323846;
constexpr cplx iu{0.0, 1.0};

enum class ErrorCode {
  invalid_argument,
  grid_too_narrow,
  singular_conversion,
  basis_exhausted,
  cutoff_too_small,
  dimension_mismatch,
  assembly_failure,
  tolerance_breach,
  root_failure,
  config_invalid,
  io_failure,
};

// All fallible operations throw Error; the C API layer maps codes to ints.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace sq
