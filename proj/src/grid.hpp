#pragma once

#include <Eigen/Dense>

#include "common.hpp"

namespace sq {

using VecC = Eigen::VectorXcd;
using VecR = Eigen::VectorXd;
using MatC = Eigen::MatrixXcd;
using MatR = Eigen::MatrixXd;

// Uniform periodic grid on [-L/2, L/2). Nz must be a power of two.
struct SpatialGrid {
  double length = 0.0;
  int num_points = 0;

  SpatialGrid() = default;
  SpatialGrid(double L, int Nz);

  double dz() const { return length / num_points; }
  double point(int i) const { return -0.5 * length + i * dz(); }
  VecR points() const;
  // Wavenumbers in FFT ordering: k_j = 2*pi*j/L for j < Nz/2, then negative.
  VecR wavenumbers() const;

  // Default domain used throughout: L*nbar = 80, Nz = 2048.
  static SpatialGrid standard(double nbar, int Nz = 2048);
};

// Unnormalized FFT conventions (FFTW): fft then ifft scales by Nz.
VecC fft(const VecC& f);
VecC ifft(const VecC& f);  // includes the 1/Nz factor

// Spectral derivatives on periodic grids.
VecC spectral_deriv(const SpatialGrid& g, const VecC& f);   // d/dz
VecC spectral_deriv2(const SpatialGrid& g, const VecC& f);  // d^2/dz^2
// Momentum operator -i d/dz, Hermitian under the dz-weighted inner product.
VecC momentum_apply(const SpatialGrid& g, const VecC& f);

inline cplx inner(const SpatialGrid& g, const VecC& f, const VecC& h) {
  return f.dot(h) * g.dz();  // Eigen dot conjugates the first argument
}

}  // namespace sq
