#pragma once

#include <functional>
#include <vector>

#include "grid.hpp"
#include "lsm.hpp"

namespace sq {

enum class GaussianBasis { lsm, grid };

// Gaussian state: mean mu_m = <a_m>, fluctuation covariances
// nmat_mn = <da_m^dag da_n> (Hermitian) and mmat_mn = <da_m da_n>
// (symmetric). Grid states use the convention a_i = sqrt(dz) phi(z_i).
struct GaussianState {
  GaussianBasis basis = GaussianBasis::lsm;
  VecC mu;
  MatC nmat;
  MatC mmat;
  double dz = 0.0;

  int size() const { return static_cast<int>(mu.size()); }
};

// Coherent soliton in the fundamental mode with vacuum fluctuations.
GaussianState init_gaussian(double nbar, int n_modes);
// Grid state with mean field phi(z): mu_i = sqrt(dz) phi(z_i).
GaussianState init_gaussian_grid(const SpatialGrid& grid, const VecC& phi);

// Linear transform a' = T a applied to mean and covariances.
void transform_state(GaussianState& state, const MatC& t);

double total_photons(const GaussianState& state);

// Real quadrature covariance [[xx, xp], [px, pp]], vacuum value I/2.
MatR quadrature_covariance(const GaussianState& state);

// Symplectic eigenvalues of the quadrature covariance (>= 1/2 for
// physical states, = 1/2 for pure states). O((2n)^3); small states only.
VecR symplectic_eigenvalues(const GaussianState& state);

// Cheap purity proxy: max-norm of (2 sigma Omega)^2 + I, which vanishes
// iff every symplectic eigenvalue equals 1/2; max |nu - 1/2| is bounded
// by roughly a quarter of this residual.
double symplectic_residual(const GaussianState& state);

struct SqueezingSpectrum {
  std::vector<double> db;      // sorted descending
  std::vector<VecC> shapes;    // orthonormal mode shapes
};

// Minimal quadrature variances as dB below vacuum,
// dB = -10 log10(2 lambda) over the n smallest eigenvalues of sigma.
SqueezingSpectrum squeezing_spectrum(const GaussianState& state);

// <a0> and <a0^dag a0> of the projection a0 = sum_i u0(z_i) sqrt(dz) a_i.
struct SupermodeProjection {
  cplx amplitude;
  double photons;
};
SupermodeProjection project_supermode(const GaussianState& state,
                                      const VecC& u0);

// Observer invoked at each requested output time.
using GaussianObserver =
    std::function<void(double t, const GaussianState& state)>;

// Fixed-step RK4 integration of the Gaussian moment-closure equations for
// H = sum D a^dag a - sum C a^dag a^dag a a in the supermode basis.
void evolve_gaussian_lsm(const CouplingTensors& tensors, GaussianState& state,
                         const std::vector<double>& times, double dt,
                         const GaussianObserver& observer = nullptr);

// Strang-split Gaussian split-step Fourier propagation on the grid, with
// dispersion k^2/2 - (pi beta3 / 2 nbar) k^3 and local Kerr nonlinearity.
void evolve_gssf(const SpatialGrid& grid, double nbar, double beta3,
                 GaussianState& state, const std::vector<double>& times,
                 double dt, const GaussianObserver& observer = nullptr);

// Single-mode Gaussian closure for a diagonal-polynomial Hamiltonian
// c1 a^dag a + c2 a^dag2 a^2 + c3 a^dag3 a^3; returns <a>(t).
std::vector<cplx> evolve_gaussian_single_mode(double c1, double c2, double c3,
                                              cplx alpha,
                                              const std::vector<double>& times,
                                              double dt);

// Reservoir spectrum <c_k^dag c_k> over the FFT-ordered wavenumber bins,
// after removing the u0 component: c_i = a_i - v_i (v^dag a), v = sqrt(dz) u0.
VecR reservoir_spectrum_grid(const GaussianState& state,
                             const SpatialGrid& grid, const VecC& u0);

// Same spectrum for an LSM-basis state: sum over reservoir modes n, m >= 1
// of utilde_n*(k) utilde_m(k) <a_n^dag a_m>.
VecR reservoir_spectrum_lsm(const GaussianState& state,
                            const SupermodeBasis& basis);

// Continuum-normalized Fourier transform of a mode profile,
// (1/sqrt(2 pi)) integral u(z) e^{-ikz} dz, over the FFT-ordered bins.
VecC fourier_profile(const SpatialGrid& grid, const VecC& u);

// Window integral of the spectrum over |k - k0| <= delta_k.
double dispersive_loss(const VecR& spectrum, const VecR& wavenumbers,
                       double k0, double delta_k);

}  // namespace sq
