#pragma once

#include "common.hpp"

namespace sq {

// Dimensionful waveguide parameters (SI units).
struct PhysicalUnits {
  double t_fwhm;  // intensity FWHM of the pulse [s]
  double v_g;     // group velocity [m/s]
  double k2;      // group velocity dispersion k'' [s^2/m], signed
  double k3;      // third-order dispersion k''' [s^3/m]
};

// Scaled TOD parameter: beta3 = -1.1 v_g |k''| / T_FWHM (1 - k'''/(3 v_g k''^2)).
double physical_beta3(const PhysicalUnits& u);

// Soliton period in physical time: T0 = 0.51 T_FWHM^2 / (v_g |k''|).
double physical_period(const PhysicalUnits& u);

}  // namespace sq
