#include "me.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "soliton.hpp"

namespace sq {

double fock_energy(int n, double nbar) {
  return nbar * nbar * n / 24.0 - nbar * (double(n) * n - n) / 12.0;
}

double omega_tilde(int n, double nbar) {
  require(n >= 1, ErrorCode::invalid_argument, "omega_tilde needs n >= 1");
  return pi * pi / 12.0 - pi * pi * (n - 1) / (3.0 * nbar);
}

double hamiltonian_limit_response() { return (pi * pi / 3.0 - 3.0) / pi; }

SpectralResponse SpectralResponse::hamiltonian_limit() {
  SpectralResponse r;
  r.kind_ = Kind::hamiltonian_limit;
  return r;
}

SpectralResponse SpectralResponse::from_table(std::vector<double> omegas,
                                              std::vector<cplx> values) {
  require(omegas.size() == values.size() && omegas.size() >= 2,
          ErrorCode::invalid_argument,
          "response table needs >= 2 matching rows");
  for (size_t i = 1; i < omegas.size(); ++i) {
    require(omegas[i] > omegas[i - 1], ErrorCode::invalid_argument,
            "response table omegas must be strictly increasing");
  }
  SpectralResponse r;
  r.kind_ = Kind::user_table;
  r.omegas_ = std::move(omegas);
  r.values_ = std::move(values);
  return r;
}

cplx SpectralResponse::operator()(double omega) const {
  if (kind_ == Kind::hamiltonian_limit) return hamiltonian_limit_response();
  require(omega >= omegas_.front() && omega <= omegas_.back(),
          ErrorCode::invalid_argument,
          "omega outside the tabulated response range");
  auto it = std::upper_bound(omegas_.begin(), omegas_.end(), omega);
  if (it == omegas_.end()) return values_.back();
  const size_t hi = it - omegas_.begin();
  const size_t lo = hi - 1;
  const double w = (omega - omegas_[lo]) / (omegas_[hi] - omegas_[lo]);
  return (1.0 - w) * values_[lo] + w * values_[hi];
}

MatC lambda_matrix(double nbar, const SpectralResponse& response, int cutoff) {
  require(nbar > 0.0, ErrorCode::invalid_argument, "nbar must be positive");
  require(cutoff > nbar + 1.0, ErrorCode::invalid_argument,
          "lambda cutoff must exceed nbar + 1");
  const double t0 = soliton_period(nbar);
  MatC lambda(cutoff, cutoff);
  for (int n = 1; n <= cutoff; ++n) {
    const double bn = 1.0 - (n - 1) / nbar;
    const cplx rn = response(omega_tilde(n, nbar));
    for (int m = 1; m <= cutoff; ++m) {
      const double bm = 1.0 - (m - 1) / nbar;
      lambda(n - 1, m - 1) =
          -iu * std::sqrt(double(n) * m) / t0 * bn * bm * rn;
    }
  }
  return lambda;
}

VecR h_fluc(double nbar, int cutoff, bool include_omega) {
  if (nbar < 25.0) {
    std::cerr << "warning: H_fluc is a large-nbar reduction; nbar = " << nbar
              << " is below its intended regime\n";
  }
  const double k = nbar * nbar / (2.0 * pi * pi) * (3.0 - pi * pi / 3.0);
  const double omega_nbar = -0.017;
  VecR diag(cutoff);
  for (int n = 0; n < cutoff; ++n) {
    const double b = 1.0 - (n - 1) / nbar;
    diag[n] = k * n * b * b;
    if (include_omega) diag[n] += omega_nbar * n * (n - 1.0);
  }
  return diag;
}

HeffCoefficients heff_coefficients(double nbar, bool include_omega) {
  const double k = nbar * nbar / (2.0 * pi * pi) * (3.0 - pi * pi / 3.0);
  const double omega_nbar = include_omega ? -0.017 : 0.0;
  HeffCoefficients c;
  c.c1 = nbar * nbar / 24.0 + k;
  c.c2 = -nbar / 12.0 + k * (1.0 / (nbar * nbar) - 2.0 / nbar) + omega_nbar;
  c.c3 = k / (nbar * nbar);
  return c;
}

VecR heff_diagonal(double nbar, int cutoff, bool include_omega) {
  VecR fluc = h_fluc(nbar, cutoff, include_omega);
  for (int n = 0; n < cutoff; ++n) fluc[n] += fock_energy(n, nbar);
  return fluc;
}

TODParams tod_window(double nbar, double beta3) {
  TODParams p;
  p.beta3 = beta3;
  p.k0 = nbar * tod_phase_matching(beta3) / pi;
  p.delta_k = nbar / pi;
  return p;
}

double tod_phase_matching(double beta3) {
  require(beta3 != 0.0, ErrorCode::invalid_argument,
          "phase matching needs beta3 != 0");
  auto f = [&](double x) { return x * x - beta3 * x * x * x + pi * pi / 4.0; };
  auto df = [&](double x) { return 2.0 * x - 3.0 * beta3 * x * x; };
  double x = 1.0 / beta3;
  for (int it = 0; it < 100; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    const double d = df(x);
    require(d != 0.0, ErrorCode::root_failure,
            "phase-matching Newton hit a stationary point");
    double step = fx / d;
    // Safeguard: keep the iterate on the original side of the origin.
    double next = x - step;
    while (next * x <= 0.0) {
      step *= 0.5;
      next = x - step;
    }
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() *
                              std::abs(x)) {
      require(std::abs(f(next)) <= 1e-12 * std::max(1.0, x * x),
              ErrorCode::root_failure, "phase-matching residual too large");
      return next;
    }
    x = next;
  }
  throw Error(ErrorCode::root_failure,
              "phase-matching Newton failed to converge in 100 iterations");
}

TODRates tod_rates(double beta3) {
  const double b = std::abs(beta3);
  require(b > 0.0 && b < 1.0, ErrorCode::invalid_argument,
          "tod_rates needs |beta3| in (0, 1)");
  TODRates r{};
  r.gamma_nl = 2.0 / (pi * b * b * b) * std::exp(-2.0 / b);
  r.omega_nl =
      (pi * pi * pi * pi / 384.0 - 17.0 * pi * pi / 480.0) * beta3 * beta3;
  r.gamma_l = r.gamma_sol = r.omega_l = r.omega_sol = 0.0;
  return r;
}

MEGenerator tod_generator(double nbar, double beta3, int cutoff) {
  MEGenerator gen;
  gen.nbar = nbar;
  gen.h_diag = heff_diagonal(nbar, cutoff, true);
  if (beta3 == 0.0) return gen;

  const TODRates rates = tod_rates(beta3);
  gen.omega_l = rates.omega_l;
  gen.omega_nl = rates.omega_nl;
  gen.omega_sol = rates.omega_sol;
  for (int n = 0; n < cutoff; ++n) {
    const double b = 1.0 - (n - 1) / nbar;
    gen.h_diag[n] += rates.omega_l * n +
                     rates.omega_nl * n * (n - 1.0) * (n - 2.0) +
                     rates.omega_sol * n * b * b;
  }

  MatC a = MatC::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
  if (rates.gamma_l > 0.0) gen.lindblads.push_back({rates.gamma_l, a});
  if (rates.gamma_nl > 0.0) {
    MatC op = MatC::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) op(n - 1, n) = std::sqrt(double(n)) * (n - 1.0);
    gen.lindblads.push_back({rates.gamma_nl, op});
  }
  if (rates.gamma_sol > 0.0) {
    MatC op = MatC::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n) {
      op(n - 1, n) = std::sqrt(double(n)) * (1.0 - (n - 1) / nbar);
    }
    gen.lindblads.push_back({rates.gamma_sol, op});
  }
  return gen;
}

}  // namespace sq
