#include <cmath>

#include "gaussian.hpp"

namespace sq {

namespace {

// Normally ordered Gaussian moments G(r, s) = <a^dag r a^s> from the mean
// and covariances, by the Isserlis recursion
// G(r,s) = mu* G(r-1,s) + (r-1) m* G(r-2,s) + s n G(r-1,s-1),
// G(0,s) = mu G(0,s-1) + (s-1) m G(0,s-2).
struct MomentTable {
  cplx g[5][5];

  MomentTable(cplx mu, double n, cplx m) {
    for (int s = 0; s <= 4; ++s) {
      g[0][s] = (s == 0) ? cplx(1.0)
                         : mu * g[0][s - 1] +
                               (s >= 2 ? (s - 1.0) * m * g[0][s - 2] : 0.0);
    }
    for (int r = 1; r <= 4; ++r) {
      for (int s = 0; s <= 4; ++s) {
        cplx v = std::conj(mu) * g[r - 1][s];
        if (r >= 2) v += (r - 1.0) * std::conj(m) * g[r - 2][s];
        if (s >= 1) v += double(s) * n * g[r - 1][s - 1];
        g[r][s] = v;
      }
    }
  }
};

struct State1 {
  cplx mu;
  double n;
  cplx m;
};

State1 rhs(double c1, double c2, double c3, const State1& y) {
  MomentTable t(y.mu, y.n, y.m);
  const double c[4] = {0.0, c1, c2, c3};

  // Wick-factorized drift; covariance couplings from the quadratic expansion
  // of the Hamiltonian about the instantaneous mean (mean-field moments only).
  cplx drift = 0.0, p_sum = 0.0;
  double a = 0.0;
  const double mu2 = std::norm(y.mu);
  for (int p = 1; p <= 3; ++p) {
    if (c[p] == 0.0) continue;
    drift += c[p] * double(p) * t.g[p - 1][p];
    a += c[p] * double(p) * p * std::pow(mu2, p - 1);
    if (p >= 2) {
      p_sum += c[p] * double(p) * (p - 1) * std::pow(y.mu, 2) *
               std::pow(mu2, p - 2);
    }
  }
  const cplx p = p_sum;

  State1 d;
  d.mu = -iu * drift;
  d.n = -2.0 * std::imag(std::conj(p) * y.m);
  d.m = -iu * (2.0 * a * y.m + 2.0 * p * y.n + p);
  return d;
}

}  // namespace

std::vector<cplx> evolve_gaussian_single_mode(double c1, double c2, double c3,
                                              cplx alpha,
                                              const std::vector<double>& times,
                                              double dt) {
  require(dt > 0.0, ErrorCode::invalid_argument, "dt must be positive");
  State1 y{alpha, 0.0, 0.0};
  std::vector<cplx> out;
  out.reserve(times.size());
  double t = 0.0;
  for (double target : times) {
    require(target >= t, ErrorCode::invalid_argument,
            "times must be nondecreasing");
    if (target > t) {
      const int steps = std::max(1, int(std::ceil((target - t) / dt - 1e-9)));
      const double h = (target - t) / steps;
      for (int s = 0; s < steps; ++s) {
        State1 k1 = rhs(c1, c2, c3, y);
        State1 y2{y.mu + 0.5 * h * k1.mu, y.n + 0.5 * h * k1.n,
                  y.m + 0.5 * h * k1.m};
        State1 k2 = rhs(c1, c2, c3, y2);
        State1 y3{y.mu + 0.5 * h * k2.mu, y.n + 0.5 * h * k2.n,
                  y.m + 0.5 * h * k2.m};
        State1 k3 = rhs(c1, c2, c3, y3);
        State1 y4{y.mu + h * k3.mu, y.n + h * k3.n, y.m + h * k3.m};
        State1 k4 = rhs(c1, c2, c3, y4);
        y.mu += h / 6.0 * (k1.mu + 2.0 * k2.mu + 2.0 * k3.mu + k4.mu);
        y.n += h / 6.0 * (k1.n + 2.0 * k2.n + 2.0 * k3.n + k4.n);
        y.m += h / 6.0 * (k1.m + 2.0 * k2.m + 2.0 * k3.m + k4.m);
      }
      t = target;
    }
    out.push_back(y.mu);
  }
  return out;
}

}  // namespace sq
