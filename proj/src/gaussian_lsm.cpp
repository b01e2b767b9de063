#include <cmath>

#include "gaussian.hpp"

namespace sq {

namespace {

struct Moments {
  VecC mu;
  MatC n, m;
};

Moments rhs(const CouplingTensors& t, const Moments& y) {
  const int n = static_cast<int>(y.mu.size());
  const VecC& mu = y.mu;

  // Quadratic expansion about the mean: A_ij = D_ij - 4 sum C_im^jl mu*_m mu_l,
  // P_ij = -2 sum C_ij^kl mu_k mu_l.
  MatC a = t.D;
  MatC p = MatC::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx sa = 0.0, sp = 0.0;
      for (int m = 0; m < n; ++m) {
        for (int l = 0; l < n; ++l) {
          sa += t.C(i, m, j, l) * std::conj(mu[m]) * mu[l];
          sp += t.C(i, j, m, l) * mu[m] * mu[l];
        }
      }
      a(i, j) -= 4.0 * sa;
      p(i, j) = -2.0 * sp;
    }
  }

  Moments d;
  // Mean drift with Wick-factorized cubic moments.
  d.mu = VecC(n);
  for (int j = 0; j < n; ++j) {
    cplx cubic = 0.0;
    for (int m = 0; m < n; ++m) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          const cplx c = t.C(j, m, k, l);
          if (c == 0.0) continue;
          cubic += c * (std::conj(mu[m]) * mu[k] * mu[l] +
                        std::conj(mu[m]) * y.m(k, l) + mu[k] * y.n(m, l) +
                        mu[l] * y.n(m, k));
        }
      }
    }
    d.mu[j] = -iu * ((t.D.row(j) * mu)(0) - 2.0 * cubic);
  }

  d.n = iu * (a.conjugate() * y.n + p.conjugate() * y.m -
              y.n * a.transpose() - y.m.conjugate() * p);
  d.m = -iu * (a * y.m + y.m * a.transpose() + p * y.n +
               y.n.transpose() * p + p);
  return d;
}

}  // namespace

void evolve_gaussian_lsm(const CouplingTensors& tensors, GaussianState& state,
                         const std::vector<double>& times, double dt,
                         const GaussianObserver& observer) {
  require(state.basis == GaussianBasis::lsm, ErrorCode::invalid_argument,
          "evolve_gaussian_lsm needs an LSM-basis state");
  require(tensors.D.rows() == state.size(), ErrorCode::dimension_mismatch,
          "tensors and state differ in mode count");
  require(dt > 0.0, ErrorCode::invalid_argument, "dt must be positive");

  Moments y{state.mu, state.nmat, state.mmat};
  double t = 0.0;
  for (double target : times) {
    require(target >= t, ErrorCode::invalid_argument,
            "times must be nondecreasing");
    if (target > t) {
      const int steps = std::max(1, int(std::ceil((target - t) / dt - 1e-9)));
      const double h = (target - t) / steps;
      for (int s = 0; s < steps; ++s) {
        Moments k1 = rhs(tensors, y);
        Moments y2{y.mu + 0.5 * h * k1.mu, y.n + 0.5 * h * k1.n,
                   y.m + 0.5 * h * k1.m};
        Moments k2 = rhs(tensors, y2);
        Moments y3{y.mu + 0.5 * h * k2.mu, y.n + 0.5 * h * k2.n,
                   y.m + 0.5 * h * k2.m};
        Moments k3 = rhs(tensors, y3);
        Moments y4{y.mu + h * k3.mu, y.n + h * k3.n, y.m + h * k3.m};
        Moments k4 = rhs(tensors, y4);
        y.mu += h / 6.0 * (k1.mu + 2.0 * k2.mu + 2.0 * k3.mu + k4.mu);
        y.n += h / 6.0 * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n);
        y.m += h / 6.0 * (k1.m + 2.0 * k2.m + 2.0 * k3.m + k4.m);
      }
      t = target;
    }
    state.mu = y.mu;
    state.nmat = y.n;
    state.mmat = y.m;

    VecR nus = symplectic_eigenvalues(state);
    require(nus.minCoeff() >= 0.5 - 1e-6, ErrorCode::tolerance_breach,
            "physicality bound violated at t = " + std::to_string(t));
    if (observer) observer(t, state);
  }
}

}  // namespace sq
