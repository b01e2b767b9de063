#include <Eigen/Eigenvalues>
#include <cmath>

#include "fock.hpp"

namespace sq {

namespace {

// One Lanczos-Krylov step: returns exp(-i dt H) v for Hermitian sparse H.
// Splits dt adaptively until the a-posteriori error estimate meets tol.
VecC krylov_expm(const SpMatC& h, const VecC& v, double dt, double tol) {
  const int dim = static_cast<int>(v.size());
  const int m_max = std::min(40, dim);
  VecC current = v;
  double remaining = dt;
  int guard = 0;
  while (remaining > 0.0) {
    require(++guard < 100000, ErrorCode::tolerance_breach,
            "Krylov propagator failed to advance");
    const double beta0 = current.norm();
    if (beta0 == 0.0) break;

    // Lanczos with full reorthogonalization.
    MatC basis(dim, m_max);
    VecR alpha(m_max), beta(m_max);
    basis.col(0) = current / beta0;
    int m = m_max;
    for (int j = 0; j < m_max; ++j) {
      VecC w = h * basis.col(j);
      alpha[j] = std::real(basis.col(j).dot(w));
      w -= alpha[j] * basis.col(j);
      if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
      for (int r = 0; r <= j; ++r) w -= basis.col(r).dot(w) * basis.col(r);
      const double b = w.norm();
      if (b < 1e-14 || j + 1 == m_max) {
        m = j + 1;
        beta[j] = b;
        if (j + 1 < m_max && b >= 1e-14) basis.col(j + 1) = w / b;
        break;
      }
      beta[j] = b;
      basis.col(j + 1) = w / b;
    }

    double step = remaining;
    for (;;) {
      MatR tri = MatR::Zero(m, m);
      for (int j = 0; j < m; ++j) {
        tri(j, j) = alpha[j];
        if (j + 1 < m) tri(j, j + 1) = tri(j + 1, j) = beta[j];
      }
      Eigen::SelfAdjointEigenSolver<MatR> eig(tri);
      VecC small = VecC::Zero(m);
      for (int j = 0; j < m; ++j) {
        cplx phase_sum = 0.0;
        for (int r = 0; r < m; ++r) {
          phase_sum += eig.eigenvectors()(j, r) *
                       std::exp(-iu * eig.eigenvalues()[r] * step) *
                       eig.eigenvectors()(0, r);
        }
        small[j] = phase_sum;
      }
      // Residual-style estimate from the last Krylov component.
      const double err = (m < dim) ? std::abs(beta[m - 1] * small[m - 1]) * step
                                   : 0.0;
      if (err <= tol || step < 1e-14 * std::abs(dt)) {
        current = beta0 * (basis.leftCols(m) * small);
        remaining -= step;
        break;
      }
      step *= 0.5;
    }
  }
  return current;
}

}  // namespace

std::vector<SectorFockState> evolve_state(const SectorOperator& h,
                                          const SectorFockState& psi0,
                                          const std::vector<double>& times,
                                          int dense_threshold,
                                          double krylov_tol) {
  const FockBasis& basis = *psi0.basis;
  require(h.basis == psi0.basis, ErrorCode::dimension_mismatch,
          "Hamiltonian and state bases differ");
  std::vector<SectorFockState> out(times.size());
  for (auto& state : out) {
    state.basis = psi0.basis;
    state.coeffs.resize(basis.num_sectors());
  }

  for (int s = 0; s < basis.num_sectors(); ++s) {
    const int dim = basis.sector_dim(s);
    if (dim == 0) continue;
    if (psi0.coeffs[s].squaredNorm() == 0.0) {
      for (auto& state : out) state.coeffs[s] = VecC::Zero(dim);
      continue;
    }
    if (dim <= dense_threshold) {
      Eigen::SelfAdjointEigenSolver<MatC> eig(MatC(h.blocks[s]));
      VecC proj = eig.eigenvectors().adjoint() * psi0.coeffs[s];
      for (size_t ti = 0; ti < times.size(); ++ti) {
        VecC rotated(dim);
        for (int j = 0; j < dim; ++j) {
          rotated[j] = std::exp(-iu * eig.eigenvalues()[j] * times[ti]) *
                       proj[j];
        }
        out[ti].coeffs[s] = eig.eigenvectors() * rotated;
      }
    } else {
      VecC current = psi0.coeffs[s];
      double t_prev = 0.0;
      for (size_t ti = 0; ti < times.size(); ++ti) {
        const double dt = times[ti] - t_prev;
        require(dt >= 0.0, ErrorCode::invalid_argument,
                "times must be nondecreasing");
        if (dt > 0.0) current = krylov_expm(h.blocks[s], current, dt, krylov_tol);
        out[ti].coeffs[s] = current;
        t_prev = times[ti];
      }
    }
  }

  for (const auto& state : out) {
    const double drift = std::abs(state.norm() - psi0.norm());
    require(drift < 1e-8, ErrorCode::tolerance_breach,
            "unitary evolution norm drift " + std::to_string(drift));
  }
  return out;
}

}  // namespace sq
