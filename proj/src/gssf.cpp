#include <fftw3.h>

#include <cmath>

#include "gaussian.hpp"

namespace sq {

namespace {

// In-place FFTs over all columns of an Nz x Nz complex matrix, through a
// workspace the plans were created on (FFTW plans are tied to alignment).
class ColumnFFT {
 public:
  explicit ColumnFFT(int n) : n_(n), ws_(n, n) {
    int dims[1] = {n};
    fwd_ = fftw_plan_many_dft(
        1, dims, n, ptr(), nullptr, 1, n, ptr(), nullptr, 1, n, FFTW_FORWARD,
        FFTW_ESTIMATE);
    bwd_ = fftw_plan_many_dft(
        1, dims, n, ptr(), nullptr, 1, n, ptr(), nullptr, 1, n, FFTW_BACKWARD,
        FFTW_ESTIMATE);
    vec_fwd_ = fftw_plan_dft_1d(n, ptr(), ptr(), FFTW_FORWARD, FFTW_ESTIMATE);
    vec_bwd_ = fftw_plan_dft_1d(n, ptr(), ptr(), FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~ColumnFFT() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
    fftw_destroy_plan(vec_fwd_);
    fftw_destroy_plan(vec_bwd_);
  }
  ColumnFFT(const ColumnFFT&) = delete;
  ColumnFFT& operator=(const ColumnFFT&) = delete;

  // x <- S x per column, S = IFFT . diag(phase) . FFT.
  void apply_columns(MatC& x, const VecC& phase) {
    ws_ = x;
    fftw_execute(fwd_);
    ws_.array().colwise() *= phase.array();
    fftw_execute(bwd_);
    x = ws_ / double(n_);
  }

  void apply_vector(VecC& x, const VecC& phase) {
    ws_.col(0) = x;
    fftw_execute_dft(vec_fwd_, ptr(), ptr());
    ws_.col(0).array() *= phase.array();
    fftw_execute_dft(vec_bwd_, ptr(), ptr());
    x = ws_.col(0) / double(n_);
  }

 private:
  fftw_complex* ptr() { return reinterpret_cast<fftw_complex*>(ws_.data()); }
  int n_;
  MatC ws_;
  fftw_plan fwd_, bwd_, vec_fwd_, vec_bwd_;
};

struct NLDeriv {
  VecC mu;
  MatC n, m;
};

// Local Kerr step derivatives: diagonal quadratic expansion with
// A_i = -4g|mu_i|^2, P_i = -2g mu_i^2, g = 1/(2 dz).
void nl_rhs(double g, const VecC& mu, const MatC& nm, const MatC& mm,
            NLDeriv& d) {
  const int n = static_cast<int>(mu.size());
  VecR a(n);
  VecC p(n);
  for (int i = 0; i < n; ++i) {
    a[i] = -4.0 * g * std::norm(mu[i]);
    p[i] = -2.0 * g * mu[i] * mu[i];
  }
  d.mu.resize(n);
  for (int i = 0; i < n; ++i) {
    d.mu[i] = 2.0 * iu * g *
              (std::norm(mu[i]) * mu[i] + std::conj(mu[i]) * mm(i, i) +
               2.0 * mu[i] * nm(i, i));
  }
  d.n.resize(n, n);
  d.m.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      d.n(i, j) = iu * ((a[i] - a[j]) * nm(i, j) +
                        std::conj(p[i]) * mm(i, j) -
                        p[j] * std::conj(mm(i, j)));
      d.m(i, j) = -iu * ((a[i] + a[j]) * mm(i, j) + p[i] * nm(i, j) +
                         p[j] * nm(j, i));
    }
  }
  for (int i = 0; i < n; ++i) d.m(i, i) -= iu * p[i];
}

}  // namespace

void evolve_gssf(const SpatialGrid& grid, double nbar, double beta3,
                 GaussianState& state, const std::vector<double>& times,
                 double dt, const GaussianObserver& observer) {
  require(state.basis == GaussianBasis::grid, ErrorCode::invalid_argument,
          "evolve_gssf needs a grid-basis state");
  const int nz = grid.num_points;
  require(state.size() == nz, ErrorCode::dimension_mismatch,
          "state size must match the grid");
  require(dt > 0.0, ErrorCode::invalid_argument, "dt must be positive");

  const double g = 1.0 / (2.0 * grid.dz());
  const double a3 = -pi * beta3 / (2.0 * nbar);
  const VecR k = grid.wavenumbers();
  VecR omega(nz);
  for (int j = 0; j < nz; ++j) {
    omega[j] = 0.5 * k[j] * k[j] + a3 * k[j] * k[j] * k[j];
  }

  ColumnFFT fftm(nz);
  MatC tmp(nz, nz);
  NLDeriv k1, k2;
  VecC mu_mid(nz);
  MatC n_mid(nz, nz), m_mid(nz, nz);

  auto linear_half = [&](double tau) {
    VecC phase(nz);
    for (int j = 0; j < nz; ++j) phase[j] = std::exp(-iu * omega[j] * tau);
    fftm.apply_vector(state.mu, phase);
    // M' = S M S^T: S on columns, then on columns of the transpose.
    fftm.apply_columns(state.mmat, phase);
    tmp = state.mmat.transpose();
    fftm.apply_columns(tmp, phase);
    state.mmat = tmp.transpose();
    // N' = conj(S) N S^T.
    tmp = state.nmat.conjugate();
    fftm.apply_columns(tmp, phase);
    state.nmat = tmp.conjugate();
    tmp = state.nmat.transpose();
    fftm.apply_columns(tmp, phase);
    state.nmat = tmp.transpose();
  };

  VecC bu(nz), bv(nz);
  auto nonlinear_full = [&](double tau) {
    // Mean by RK2 midpoint on the local quadratic expansion; covariances by
    // the exact per-site Bogoliubov flow of the expansion frozen at the
    // midpoint mean (exponential midpoint rule). The covariance map is
    // exactly symplectic, so purity is preserved to rounding.
    nl_rhs(g, state.mu, state.nmat, state.mmat, k1);
    mu_mid = state.mu + 0.5 * tau * k1.mu;
    n_mid = state.nmat + 0.5 * tau * k1.n;
    m_mid = state.mmat + 0.5 * tau * k1.m;
    nl_rhs(g, mu_mid, n_mid, m_mid, k2);
    state.mu += tau * k2.mu;

    // a_i(tau) = u_i a_i + v_i a_i^dag from d a/dt = -i(alpha a + p a^dag),
    // alpha_i = -4g|mu_i|^2, p_i = -2g mu_i^2 at the midpoint mean.
    for (int i = 0; i < nz; ++i) {
      const double alpha = -4.0 * g * std::norm(mu_mid[i]);
      const cplx p = -2.0 * g * mu_mid[i] * mu_mid[i];
      const double s = std::norm(p) - alpha * alpha;
      const double x = s * tau * tau;
      double ch, shc;  // cosh(theta tau), sinh(theta tau)/theta
      if (x > 1e-8) {
        const double w = std::sqrt(x);
        ch = std::cosh(w);
        shc = tau * std::sinh(w) / w;
      } else if (x < -1e-8) {
        const double w = std::sqrt(-x);
        ch = std::cos(w);
        shc = tau * std::sin(w) / w;
      } else {
        ch = 1.0 + 0.5 * x;
        shc = tau * (1.0 + x / 6.0);
      }
      bu[i] = cplx(ch, 0.0) - iu * alpha * shc;
      bv[i] = -iu * p * shc;
    }
    for (int j = 0; j < nz; ++j) {
      for (int i = 0; i < nz; ++i) {
        const cplx nij = state.nmat(i, j);
        const cplx mij = state.mmat(i, j);
        n_mid(i, j) = std::conj(bu[i]) * bu[j] * nij +
                      std::conj(bu[i]) * bv[j] * std::conj(mij) +
                      std::conj(bv[i]) * bu[j] * mij +
                      std::conj(bv[i]) * bv[j] * std::conj(nij);
        m_mid(i, j) = bu[i] * bu[j] * mij + bu[i] * bv[j] * std::conj(nij) +
                      bv[i] * bu[j] * nij + bv[i] * bv[j] * std::conj(mij);
      }
    }
    for (int i = 0; i < nz; ++i) {
      n_mid(i, i) += std::norm(bv[i]);
      m_mid(i, i) += bu[i] * bv[i];
    }
    state.nmat.swap(n_mid);
    state.mmat.swap(m_mid);
  };

  double t = 0.0;
  for (double target : times) {
    require(target >= t, ErrorCode::invalid_argument,
            "times must be nondecreasing");
    if (target > t) {
      const int steps = std::max(1, int(std::ceil((target - t) / dt - 1e-9)));
      const double h = (target - t) / steps;
      for (int s = 0; s < steps; ++s) {
        linear_half(0.5 * h);
        nonlinear_full(h);
        linear_half(0.5 * h);
      }
      t = target;
    }
    const double min_diag = state.nmat.diagonal().real().minCoeff();
    require(min_diag >= -1e-6, ErrorCode::tolerance_breach,
            "physicality drift (negative mode population) at t = " +
                std::to_string(t));
    if (observer) observer(t, state);
  }
}

}  // namespace sq
