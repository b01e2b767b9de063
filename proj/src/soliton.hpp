#pragma once

#include "grid.hpp"

namespace sq {

// Classical fundamental soliton parameters in dimensionless units.
struct SolitonParams {
  double nbar;  // classical soliton photon number
  double T0;    // fundamental soliton period, 2*pi/nbar^2

  explicit SolitonParams(double nbar_);
};

double soliton_period(double nbar);

// f(z, t) = (nbar/2) sech(nbar z / 2) exp(i nbar^2 t / 8) sampled on the grid.
// Throws grid_too_narrow if the boundary amplitude exceeds
// boundary_tol * peak (default 1e-8; the standard L*nbar = 80 domain sits at
// sech(20) ~ 4e-9).
VecC soliton_profile(const SolitonParams& params, const SpatialGrid& grid,
                     double t, double boundary_tol = 1e-8);

// Normalized supermode profile u0 = f(.,0)/sqrt(nbar); sum |u0|^2 dz = 1.
VecC soliton_supermode(const SolitonParams& params, const SpatialGrid& grid,
                       double boundary_tol = 1e-8);

}  // namespace sq
