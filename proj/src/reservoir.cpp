#include <cmath>

#include "gaussian.hpp"

namespace sq {

VecC fourier_profile(const SpatialGrid& grid, const VecC& u) {
  require(u.size() == grid.num_points, ErrorCode::dimension_mismatch,
          "profile must live on the grid");
  VecC hat = fft(u);
  const VecR k = grid.wavenumbers();
  const double w = grid.dz() / std::sqrt(2.0 * pi);
  for (int j = 0; j < grid.num_points; ++j) {
    hat[j] *= w * std::exp(iu * k[j] * 0.5 * grid.length);
  }
  return hat;
}

VecR reservoir_spectrum_grid(const GaussianState& state,
                             const SpatialGrid& grid, const VecC& u0) {
  require(state.basis == GaussianBasis::grid, ErrorCode::invalid_argument,
          "grid reservoir spectrum needs a grid-basis state");
  const int nz = grid.num_points;
  require(state.size() == nz && u0.size() == nz,
          ErrorCode::dimension_mismatch, "state and u0 must share the grid");

  // Remove the soliton component: c = (I - v v^dag) a, v = sqrt(dz) u0.
  VecC v = std::sqrt(grid.dz()) * u0;
  v /= v.norm();
  VecC mu = state.mu - v * v.dot(state.mu);
  // N_c = conj(P) N P^T with P = I - v v^dag, via rank-1 updates.
  MatC nc = state.nmat;
  nc -= v.conjugate() * (v.transpose() * nc).eval();
  nc -= (nc * v.conjugate()).eval() * v.transpose();

  // Unitary DFT; the grid-offset phases cancel on the diagonal.
  VecC mu_hat = fft(mu) / std::sqrt(double(nz));

  // diag of conj(W) N_c W^T / nz: row FFT, conjugate, column FFT.
  MatC b(nz, nz);
  for (int r = 0; r < nz; ++r) {
    b.row(r) = fft(VecC(nc.row(r).transpose())).transpose();
  }
  VecR spec(nz);
  for (int k = 0; k < nz; ++k) {
    VecC col = fft(VecC(b.col(k).conjugate()));
    spec[k] = std::norm(mu_hat[k]) + std::real(std::conj(col[k])) / nz;
  }
  return spec;
}

VecR reservoir_spectrum_lsm(const GaussianState& state,
                            const SupermodeBasis& basis) {
  require(state.basis == GaussianBasis::lsm, ErrorCode::invalid_argument,
          "LSM reservoir spectrum needs an LSM-basis state");
  const int n = state.size();
  require(basis.size() >= n, ErrorCode::dimension_mismatch,
          "supermode basis smaller than the state");
  const int nz = basis.grid.num_points;
  const double dz = basis.grid.dz();

  MatC hats(nz, n);
  for (int m = 0; m < n; ++m) {
    hats.col(m) = fft(VecC(std::sqrt(dz) * basis.modes.col(m))) /
                  std::sqrt(double(nz));
  }
  VecR spec = VecR::Zero(nz);
  for (int k = 0; k < nz; ++k) {
    cplx s = 0.0;
    for (int a = 1; a < n; ++a) {
      for (int b = 1; b < n; ++b) {
        s += std::conj(hats(k, a)) * hats(k, b) *
             (std::conj(state.mu[a]) * state.mu[b] + state.nmat(a, b));
      }
    }
    spec[k] = std::real(s);
  }
  return spec;
}

}  // namespace sq
