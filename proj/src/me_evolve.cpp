#include <Eigen/Eigenvalues>
#include <cmath>

#include "me.hpp"

namespace sq {

MatC l1_apply(const MatC& lambda, const MatC& rho) {
  const int dim = static_cast<int>(rho.rows());
  require(lambda.rows() >= dim - 1 && lambda.rows() == lambda.cols(),
          ErrorCode::dimension_mismatch, "Lambda matrix too small for rho");
  MatC x = MatC::Zero(dim, dim);
  for (int a = 0; a + 1 < dim; ++a) {
    for (int b = 0; b + 1 < dim; ++b) {
      x(a, b) = lambda(a, b) * rho(a + 1, b + 1);
    }
  }
  for (int a = 1; a < dim; ++a) {
    x.row(a) -= lambda(a - 1, a - 1) * rho.row(a);
  }
  return x + x.adjoint().eval();
}

namespace {

struct RHS {
  const MEGenerator* gen;
  std::vector<MatC> ldag_l;  // precomputed L^dag L per channel

  MatC operator()(const MatC& rho) const {
    const int dim = static_cast<int>(rho.rows());
    MatC out(dim, dim);
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) {
        out(a, b) = -iu * (gen->h_diag[a] - gen->h_diag[b]) * rho(a, b);
      }
    }
    if (gen->lambda.size() > 0) out += l1_apply(gen->lambda, rho);
    for (size_t j = 0; j < gen->lindblads.size(); ++j) {
      const auto& ch = gen->lindblads[j];
      out.noalias() += ch.rate * (ch.op * rho * ch.op.adjoint());
      MatC anti = ldag_l[j] * rho + rho * ldag_l[j];
      out -= (0.5 * ch.rate) * anti;
    }
    return out;
  }
};

}  // namespace

std::vector<MatC> evolve_density_me(const MEGenerator& gen, const MatC& rho0,
                                    const std::vector<double>& times,
                                    const MEOptions& opts, MEDiagnostics* diag) {
  const int dim = static_cast<int>(rho0.rows());
  require(rho0.cols() == dim, ErrorCode::dimension_mismatch,
          "rho0 must be square");
  require(gen.h_diag.size() >= dim, ErrorCode::dimension_mismatch,
          "h_diag shorter than the density matrix dimension");
  for (const auto& ch : gen.lindblads) {
    require(ch.rate >= 0.0, ErrorCode::invalid_argument,
            "Lindblad rates must be nonnegative");
    require(ch.op.rows() == dim && ch.op.cols() == dim,
            ErrorCode::dimension_mismatch, "Lindblad operator dimension");
  }

  RHS rhs{&gen, {}};
  for (const auto& ch : gen.lindblads) {
    rhs.ldag_l.push_back(ch.op.adjoint() * ch.op);
  }

  // Dormand-Prince 5(4) tableau.
  static const double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
       -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double b5[7] = {35.0 / 384,      0.0,           500.0 / 1113,
                               125.0 / 192,     -2187.0 / 6784, 11.0 / 84,
                               0.0};
  static const double b4[7] = {5179.0 / 57600,  0.0,
                               7571.0 / 16695,  393.0 / 640,
                               -92097.0 / 339200, 187.0 / 2100,
                               1.0 / 40};

  const double trace0 = std::real(rho0.trace());
  MEDiagnostics local;
  local.min_eigenvalue = 1e300;

  double h_scale = gen.h_diag.head(dim).cwiseAbs().maxCoeff();
  for (const auto& ch : gen.lindblads) h_scale += ch.rate;
  if (gen.lambda.size() > 0) h_scale += gen.lambda.cwiseAbs().maxCoeff();
  double dt = 0.1 / std::max(h_scale, 1e-12);

  std::vector<MatC> out;
  out.reserve(times.size());
  MatC rho = rho0;
  double t = 0.0;
  std::vector<MatC> k(7);

  for (double target : times) {
    require(target >= t, ErrorCode::invalid_argument,
            "times must be nondecreasing");
    while (t < target) {
      double step = std::min(dt, target - t);
      k[0] = rhs(rho);
      for (;;) {
        for (int s = 1; s < 7; ++s) {
          MatC y = rho;
          for (int j = 0; j < s; ++j) {
            if (a[s][j] != 0.0) y += (step * a[s][j]) * k[j];
          }
          k[s] = rhs(y);
        }
        MatC y5 = rho, err = MatC::Zero(dim, dim);
        for (int s = 0; s < 7; ++s) {
          if (b5[s] != 0.0) y5 += (step * b5[s]) * k[s];
          err += (step * (b5[s] - b4[s])) * k[s];
        }
        const double e = err.cwiseAbs().maxCoeff();
        const double tol =
            opts.atol + opts.rtol * rho.cwiseAbs().maxCoeff();
        if (e <= tol) {
          rho = y5;
          t += step;
          const double grow =
              (e > 0.0) ? 0.9 * std::pow(tol / e, 0.2) : 5.0;
          dt = step * std::min(5.0, std::max(0.2, grow));
          break;
        }
        step *= std::max(0.2, 0.9 * std::pow(tol / e, 0.2));
        require(step > 1e-15 * std::max(target, 1.0),
                ErrorCode::tolerance_breach,
                "master-equation step size underflow at t = " +
                    std::to_string(t));
      }
    }
    const double drift = std::abs(std::real(rho.trace()) - trace0);
    local.max_trace_drift = std::max(local.max_trace_drift, drift);
    require(drift <= opts.trace_tol, ErrorCode::tolerance_breach,
            "trace drift " + std::to_string(drift) + " at t = " +
                std::to_string(t));
    Eigen::SelfAdjointEigenSolver<MatC> eig(0.5 * (rho + rho.adjoint().eval()));
    local.min_eigenvalue =
        std::min(local.min_eigenvalue, eig.eigenvalues().minCoeff());
    out.push_back(rho);
  }
  if (diag) *diag = local;
  return out;
}

namespace {

// Poisson weights p_n = e^{-nb} nb^n / n!, by a stable log recursion.
VecR poisson_weights(double nb, int count) {
  VecR p(count);
  double log_w = -nb;
  for (int n = 0; n < count; ++n) {
    if (n > 0) log_w += std::log(nb) - std::log(double(n));
    p[n] = std::exp(log_w);
  }
  return p;
}

}  // namespace

std::vector<cplx> exact_diagonal_evolution(const VecR& h_diag, cplx alpha,
                                           const std::vector<double>& times,
                                           double tail_tol) {
  const int dim = static_cast<int>(h_diag.size());
  require(dim >= 2, ErrorCode::invalid_argument, "h_diag needs >= 2 entries");
  const double nb = std::norm(alpha);
  VecR p = poisson_weights(nb, dim - 1);
  const double tail = 1.0 - p.sum();
  require(tail <= tail_tol, ErrorCode::cutoff_too_small,
          "Poisson tail mass " + std::to_string(tail) +
              " beyond the diagonal range");

  std::vector<cplx> out(times.size());
  for (size_t ti = 0; ti < times.size(); ++ti) {
    cplx s = 0.0;
    for (int n = 0; n + 1 < dim; ++n) {
      if (p[n] == 0.0) continue;
      s += p[n] * std::exp(-iu * (h_diag[n + 1] - h_diag[n]) * times[ti]);
    }
    out[ti] = alpha * s;
  }
  return out;
}

MatC exact_diagonal_density(const VecR& h_diag, cplx alpha, double t) {
  const int dim = static_cast<int>(h_diag.size());
  const double nb = std::norm(alpha);
  VecR p = poisson_weights(nb, dim);
  const double kept = p.sum();
  const double phase0 = std::arg(alpha);
  VecC c(dim);
  for (int n = 0; n < dim; ++n) {
    c[n] = std::sqrt(p[n] / kept) * std::exp(iu * (phase0 * double(n))) *
           std::exp(-iu * h_diag[n] * t);
  }
  return c * c.adjoint();
}

double tod_population_loss(double nbar, double beta3, double t) {
  require(nbar > 0.0 && t >= 0.0, ErrorCode::invalid_argument,
          "tod_population_loss needs nbar > 0, t >= 0");
  const TODRates rates = tod_rates(beta3);
  const double sigma = std::sqrt(nbar);
  const int n_lo = std::max(0, int(nbar - 10.0 * sigma));
  const int n_hi = int(nbar + 10.0 * sigma) + 1;
  const int count = n_hi - n_lo + 1;

  VecR w(count);
  for (int i = 0; i < count; ++i) {
    const double n = n_lo + i;
    const double b = 1.0 - (n - 1.0) / nbar;
    w[i] = rates.gamma_l * n + rates.gamma_nl * n * (n - 1.0) * (n - 1.0) +
           rates.gamma_sol * n * b * b;
  }
  VecR p = poisson_weights(nbar, n_hi + 1).segment(n_lo, count);

  // Birth-death equations dp_n/dt = W_{n+1} p_{n+1} - W_n p_n; each jump
  // removes one photon, so loss accumulates as sum_n W_n p_n.
  auto deriv = [&](const VecR& q, VecR& dq, double& dloss) {
    dloss = 0.0;
    for (int i = 0; i < count; ++i) {
      dq[i] = -w[i] * q[i];
      if (i + 1 < count) dq[i] += w[i + 1] * q[i + 1];
      dloss += w[i] * q[i];
    }
  };

  const double w_max = w.maxCoeff();
  int steps = std::max(50, int(10.0 * w_max * t) + 1);
  require(steps <= 5000000, ErrorCode::invalid_argument,
          "TOD decay too stiff for the population solver");
  const double dt = t / steps;
  double loss = 0.0;
  VecR k1(count), k2(count), k3(count), k4(count), tmp(count);
  double l1, l2, l3, l4;
  for (int s = 0; s < steps; ++s) {
    deriv(p, k1, l1);
    tmp = p + 0.5 * dt * k1;
    deriv(tmp, k2, l2);
    tmp = p + 0.5 * dt * k2;
    deriv(tmp, k3, l3);
    tmp = p + dt * k3;
    deriv(tmp, k4, l4);
    p += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    loss += dt / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
  }
  return loss;
}

}  // namespace sq
