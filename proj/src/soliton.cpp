#include "soliton.hpp"

#include <cmath>

namespace sq {

SolitonParams::SolitonParams(double nbar_) {
  require(nbar_ > 0.0, ErrorCode::invalid_argument, "nbar must be positive");
  nbar = nbar_;
  T0 = soliton_period(nbar_);
}

double soliton_period(double nbar) {
  require(nbar > 0.0, ErrorCode::invalid_argument, "nbar must be positive");
  return 2.0 * pi / (nbar * nbar);
}

VecC soliton_profile(const SolitonParams& params, const SpatialGrid& grid,
                     double t, double boundary_tol) {
  const double nbar = params.nbar;
  const double peak = 0.5 * nbar;
  const double boundary = peak / std::cosh(0.25 * nbar * grid.length);
  require(boundary <= boundary_tol * peak, ErrorCode::grid_too_narrow,
          "soliton tail at the domain boundary exceeds tolerance; widen grid");
  const cplx phase = std::exp(iu * (nbar * nbar * t / 8.0));
  VecC f(grid.num_points);
  for (int i = 0; i < grid.num_points; ++i) {
    f[i] = peak / std::cosh(0.5 * nbar * grid.point(i)) * phase;
  }
  return f;
}

VecC soliton_supermode(const SolitonParams& params, const SpatialGrid& grid,
                       double boundary_tol) {
  return soliton_profile(params, grid, 0.0, boundary_tol) /
         std::sqrt(params.nbar);
}

}  // namespace sq
