#include "units.hpp"

#include <cmath>

namespace sq {

namespace {
void check(const PhysicalUnits& u) {
  require(u.t_fwhm > 0.0, ErrorCode::invalid_argument, "t_fwhm must be positive");
  require(u.v_g > 0.0, ErrorCode::invalid_argument, "v_g must be positive");
  require(u.k2 != 0.0, ErrorCode::singular_conversion,
          "conversion is singular at zero GVD");
}
}  // namespace

double physical_beta3(const PhysicalUnits& u) {
  check(u);
  const double lead = -1.1 * u.v_g * std::abs(u.k2) / u.t_fwhm;
  return lead * (1.0 - u.k3 / (3.0 * u.v_g * u.k2 * u.k2));
}

double physical_period(const PhysicalUnits& u) {
  check(u);
  return 0.51 * u.t_fwhm * u.t_fwhm / (u.v_g * std::abs(u.k2));
}

}  // namespace sq
