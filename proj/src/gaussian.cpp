#include "gaussian.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace sq {

GaussianState init_gaussian(double nbar, int n_modes) {
  require(nbar >= 0.0 && n_modes >= 1, ErrorCode::invalid_argument,
          "init_gaussian needs nbar >= 0 and n_modes >= 1");
  GaussianState s;
  s.basis = GaussianBasis::lsm;
  s.mu = VecC::Zero(n_modes);
  s.mu[0] = std::sqrt(nbar);
  s.nmat = MatC::Zero(n_modes, n_modes);
  s.mmat = MatC::Zero(n_modes, n_modes);
  return s;
}

GaussianState init_gaussian_grid(const SpatialGrid& grid, const VecC& phi) {
  require(phi.size() == grid.num_points, ErrorCode::dimension_mismatch,
          "mean field size must match the grid");
  GaussianState s;
  s.basis = GaussianBasis::grid;
  s.dz = grid.dz();
  s.mu = std::sqrt(s.dz) * phi;
  s.nmat = MatC::Zero(grid.num_points, grid.num_points);
  s.mmat = MatC::Zero(grid.num_points, grid.num_points);
  return s;
}

void transform_state(GaussianState& state, const MatC& t) {
  state.mu = t * state.mu;
  state.nmat = t.conjugate() * state.nmat * t.transpose();
  state.mmat = t * state.mmat * t.transpose();
}

double total_photons(const GaussianState& state) {
  return state.mu.squaredNorm() + std::real(state.nmat.trace());
}

MatR quadrature_covariance(const GaussianState& state) {
  const int n = state.size();
  MatR sigma(2 * n, 2 * n);
  MatR re_m = state.mmat.real(), im_m = state.mmat.imag();
  MatR re_n = state.nmat.real(), im_n = state.nmat.imag();
  MatR half = 0.5 * MatR::Identity(n, n);
  sigma.topLeftCorner(n, n) = re_m + re_n + half;
  sigma.bottomRightCorner(n, n) = re_n - re_m + half;
  MatR xp = im_m + im_n;
  sigma.topRightCorner(n, n) = xp;
  sigma.bottomLeftCorner(n, n) = xp.transpose();
  return sigma;
}

VecR symplectic_eigenvalues(const GaussianState& state) {
  const int n = state.size();
  MatR sigma = quadrature_covariance(state);
  // Omega sigma has eigenvalues +- i nu.
  MatR omega_sigma(2 * n, 2 * n);
  omega_sigma.topRows(n) = sigma.bottomRows(n);
  omega_sigma.bottomRows(n) = -sigma.topRows(n);
  Eigen::EigenSolver<MatR> eig(omega_sigma);
  std::vector<double> nus;
  for (int j = 0; j < 2 * n; ++j) {
    const double im = eig.eigenvalues()[j].imag();
    if (im > 0.0) nus.push_back(std::abs(eig.eigenvalues()[j]));
  }
  std::sort(nus.begin(), nus.end());
  require(static_cast<int>(nus.size()) == n, ErrorCode::tolerance_breach,
          "symplectic spectrum did not split into conjugate pairs");
  VecR out(n);
  for (int j = 0; j < n; ++j) out[j] = nus[j];
  return out;
}

double symplectic_residual(const GaussianState& state) {
  const int n = state.size();
  MatR sigma = quadrature_covariance(state);
  MatR t(2 * n, 2 * n);  // 2 sigma Omega
  t.leftCols(n) = -2.0 * sigma.rightCols(n);
  t.rightCols(n) = 2.0 * sigma.leftCols(n);
  MatR r = t * t + MatR::Identity(2 * n, 2 * n);
  return r.cwiseAbs().maxCoeff();
}

SupermodeProjection project_supermode(const GaussianState& state,
                                      const VecC& u0) {
  VecC v = u0;
  if (state.basis == GaussianBasis::grid) {
    require(u0.size() == state.mu.size(), ErrorCode::dimension_mismatch,
            "u0 must live on the state grid");
    v *= std::sqrt(state.dz);
  } else {
    // LSM basis: u0 is the coefficient vector of the projection target.
    require(u0.size() == state.mu.size(), ErrorCode::dimension_mismatch,
            "projection vector size mismatch");
  }
  SupermodeProjection p;
  p.amplitude = v.dot(state.mu);  // v^dag mu
  const cplx fluct = v.transpose() * state.nmat * v.conjugate();
  p.photons = std::norm(p.amplitude) + std::real(fluct);
  return p;
}

double dispersive_loss(const VecR& spectrum, const VecR& wavenumbers,
                       double k0, double delta_k) {
  require(spectrum.size() == wavenumbers.size(), ErrorCode::dimension_mismatch,
          "spectrum and wavenumber arrays differ in length");
  require(delta_k > 0.0, ErrorCode::invalid_argument, "delta_k must be > 0");
  double total = 0.0;
  for (Eigen::Index j = 0; j < spectrum.size(); ++j) {
    if (std::abs(wavenumbers[j] - k0) <= delta_k) total += spectrum[j];
  }
  return total;
}

}  // namespace sq
