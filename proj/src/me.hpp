#pragma once

#include <vector>

#include "grid.hpp"

namespace sq {

// Eigenenergy of H_0 for the n-photon Fock state.
double fock_energy(int n, double nbar);

// omega_tilde_n = pi T0 (E_n - E_{n-1}) = pi^2/12 - pi^2 (n-1)/(3 nbar).
double omega_tilde(int n, double nbar);

// Spectral response R(omega) entering the Lambda matrix. Two variants: the
// "hamiltonian-limit" constant for which the one-photon dissipator reduces
// exactly to -i[H_fluc first term, rho], and a user-supplied table with
// linear interpolation.
class SpectralResponse {
 public:
  enum class Kind { hamiltonian_limit, user_table };

  static SpectralResponse hamiltonian_limit();
  // Table of (omega, R) pairs; omegas must be strictly increasing.
  static SpectralResponse from_table(std::vector<double> omegas,
                                     std::vector<cplx> values);

  cplx operator()(double omega) const;
  Kind kind() const { return kind_; }

 private:
  SpectralResponse() = default;
  Kind kind_ = Kind::hamiltonian_limit;
  std::vector<double> omegas_;
  std::vector<cplx> values_;
};

// Constant value of the hamiltonian-limit response, (pi^2/3 - 3)/pi; the
// sign is fixed by requiring L1 rho = -i[H_fluc first term, rho].
double hamiltonian_limit_response();

// Lambda_nm = -i sqrt(nm)/T0 [1-(n-1)/nbar][1-(m-1)/nbar] R(omega_tilde_n)
// for n, m in 1..cutoff, stored at (n-1, m-1). Requires cutoff > nbar + 1.
MatC lambda_matrix(double nbar, const SpectralResponse& response, int cutoff);

// Diagonal of H_fluc: (nbar^2/2pi^2)(3 - pi^2/3) n (1-(n-1)/nbar)^2 plus,
// when included, Omega_nbar n(n-1) with Omega_nbar = -0.017.
VecR h_fluc(double nbar, int cutoff, bool include_omega);

// H_eff = H_0 + H_fluc as a normal-ordered polynomial
// c1 a^dag a + c2 a^dag2 a^2 + c3 a^dag3 a^3.
struct HeffCoefficients {
  double c1, c2, c3;
};
HeffCoefficients heff_coefficients(double nbar, bool include_omega);

// Diagonal of H_eff on Fock states 0..cutoff-1.
VecR heff_diagonal(double nbar, int cutoff, bool include_omega);

// Lindblad channel: rate and a dense single-mode jump operator.
struct Lindblad {
  double rate;
  MatC op;
};

// Single-supermode master-equation generator:
// d rho/dt = -i[diag(h_diag), rho] + L1(lambda) + sum Lindblad channels.
struct MEGenerator {
  double nbar = 0.0;
  VecR h_diag;
  MatC lambda;  // empty when no Lambda dissipator
  std::vector<Lindblad> lindblads;
  double omega_l = 0.0, omega_nl = 0.0, omega_sol = 0.0;
};

struct TODParams {
  double beta3;
  double k0;
  double delta_k;
};

// Window defaults k0 = nbar x0 / pi, pi delta_k / nbar = 1.
TODParams tod_window(double nbar, double beta3);

// Real root x0 of x^2 - beta3 x^3 + pi^2/4 = 0 (phase matching with the
// large-nbar transition frequency -pi^2/4), by safeguarded Newton from 1/beta3.
double tod_phase_matching(double beta3);

struct TODRates {
  double gamma_nl, omega_nl;
  double gamma_l, gamma_sol, omega_l, omega_sol;
};

// Leading-order TOD rates: gamma_nl = (2/pi |b3|^3) e^{-2/|b3|},
// omega_nl = (pi^4/384 - 17 pi^2/480) b3^2; the remaining four vanish in
// this approximation.
TODRates tod_rates(double beta3);

// H_eff plus the TOD frequency shifts and Lindblad channels
// sqrt(g_l) a, sqrt(g_nl) a^dag a^2, sqrt(g_sol) (1 - a^dag a/nbar) a.
MEGenerator tod_generator(double nbar, double beta3, int cutoff);

// One-reservoir-photon dissipator L1 rho for a given Lambda matrix.
MatC l1_apply(const MatC& lambda, const MatC& rho);

struct MEOptions {
  double rtol = 1e-9;
  double atol = 1e-11;
  double trace_tol = 1e-7;
};

struct MEDiagnostics {
  double max_trace_drift = 0.0;
  double min_eigenvalue = 0.0;  // most negative eigenvalue seen at outputs
};

// Adaptive (Dormand-Prince 5(4)) integration of the master equation.
std::vector<MatC> evolve_density_me(const MEGenerator& gen, const MatC& rho0,
                                    const std::vector<double>& times,
                                    const MEOptions& opts = {},
                                    MEDiagnostics* diag = nullptr);

// <a>(t) for a coherent state alpha under a diagonal Hamiltonian:
// <a>(t) = e^{-|a|^2} sum_n (|a|^2n / n!) alpha e^{-i(eps_{n+1}-eps_n)t}.
// Errors if the Poisson tail beyond the h_diag range exceeds tail_tol.
std::vector<cplx> exact_diagonal_evolution(const VecR& h_diag, cplx alpha,
                                           const std::vector<double>& times,
                                           double tail_tol = 1e-12);

// Full density matrix at one time under the same exact diagonal dynamics.
MatC exact_diagonal_density(const VecR& h_diag, cplx alpha, double t);

// Expected photon loss of an initially coherent state under the TOD decay
// channels alone, by the population birth-death equations on a Poisson
// window around nbar. Valid at large nbar where coherences are irrelevant
// to the loss.
double tod_population_loss(double nbar, double beta3, double t);

}  // namespace sq
