#include "lsm.hpp"

#include <array>
#include <cmath>
#include <map>

namespace sq {

SupermodeBasis build_supermodes(const VecC& u0, const SpatialGrid& grid,
                                double nbar, int n_lsm) {
  require(n_lsm >= 1, ErrorCode::invalid_argument, "n_lsm must be >= 1");
  require(n_lsm <= grid.num_points, ErrorCode::invalid_argument,
          "n_lsm cannot exceed the grid size");
  const double norm0 = std::sqrt(std::real(inner(grid, u0, u0)));
  require(std::abs(norm0 - 1.0) < 1e-8, ErrorCode::invalid_argument,
          "seed profile u0 must be normalized");

  SupermodeBasis basis;
  basis.grid = grid;
  basis.nbar = nbar;
  basis.modes.resize(grid.num_points, n_lsm);
  basis.modes.col(0) = u0 / norm0;

  for (int n = 0; n + 1 < n_lsm; ++n) {
    VecC w = momentum_apply(grid, basis.modes.col(n));
    const double alpha = std::real(inner(grid, basis.modes.col(n), w));
    basis.alphas.push_back(alpha);
    w -= alpha * basis.modes.col(n);
    if (n > 0) w -= basis.betas.back() * basis.modes.col(n - 1);
    // Full reorthogonalization: Krylov vectors of sech profiles lose
    // orthogonality quickly in finite precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (int m = 0; m <= n; ++m) {
        w -= inner(grid, basis.modes.col(m), w) * basis.modes.col(m);
      }
    }
    const double beta = std::sqrt(std::real(inner(grid, w, w)));
    if (beta < 1e-12) {
      throw Error(ErrorCode::basis_exhausted,
                  "Lanczos breakdown at rank " + std::to_string(n + 1));
    }
    basis.betas.push_back(beta);
    basis.modes.col(n + 1) = w / beta;
  }
  if (static_cast<int>(basis.alphas.size()) < n_lsm) {
    // Last diagonal coefficient, for completeness of the recurrence record.
    VecC w = momentum_apply(grid, basis.modes.col(n_lsm - 1));
    basis.alphas.push_back(
        std::real(inner(grid, basis.modes.col(n_lsm - 1), w)));
  }
  return basis;
}

namespace {

// Matrix of a spectral multiplier sigma(k) in the supermode basis:
// M_nm = (dz/Nz) sum_j sigma(k_j) conj(F u_n)_j (F u_m)_j.
MatC spectral_matrix(const SupermodeBasis& basis, const VecR& sigma) {
  const int n = basis.size();
  const int nz = basis.grid.num_points;
  MatC hats(nz, n);
  for (int m = 0; m < n; ++m) hats.col(m) = fft(VecC(basis.modes.col(m)));
  const double w = basis.grid.dz() / nz;
  MatC out(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      cplx s = 0.0;
      for (int j = 0; j < nz; ++j) {
        s += sigma[j] * std::conj(hats(j, a)) * hats(j, b);
      }
      out(a, b) = w * s;
      out(b, a) = std::conj(w * s);
    }
  }
  return out;
}

}  // namespace

MatC dispersion_matrix(const SupermodeBasis& basis) {
  VecR k = basis.grid.wavenumbers();
  VecR sigma = 0.5 * k.array().square();
  return spectral_matrix(basis, sigma);
}

MatC tod_dispersion_matrix(const SupermodeBasis& basis, double beta3) {
  VecR k = basis.grid.wavenumbers();
  const double a3 = -pi * beta3 / (2.0 * basis.nbar);
  VecR sigma = a3 * k.array().cube();
  return spectral_matrix(basis, sigma);
}

NonlinearTensor nonlinear_tensor(const SupermodeBasis& basis) {
  const int n = basis.size();
  const int nz = basis.grid.num_points;
  NonlinearTensor t;
  t.n = n;
  t.c.assign(static_cast<size_t>(n) * n * n * n, cplx(0.0));
  const double w = 0.5 * basis.grid.dz();
  // Quadrature for ordered index pairs; remaining entries follow from the
  // integrand symmetries n<->m, k<->l and C_nm^kl = conj(C_kl^nm).
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      VecC left = basis.modes.col(a).conjugate().cwiseProduct(
          basis.modes.col(b).conjugate());
      for (int k = 0; k < n; ++k) {
        for (int l = k; l < n; ++l) {
          cplx s = 0.0;
          for (int j = 0; j < nz; ++j) {
            s += left[j] * basis.modes(j, k) * basis.modes(j, l);
          }
          s *= w;
          t.at(a, b, k, l) = s;
          t.at(b, a, k, l) = s;
          t.at(a, b, l, k) = s;
          t.at(b, a, l, k) = s;
        }
      }
    }
  }
  // Hermitian pairing: average C_nm^kl with conj(C_kl^nm).
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if ((a * n + b) * n * n + k * n + l <
              (k * n + l) * n * n + a * n + b) {
            cplx avg = 0.5 * (t(a, b, k, l) + std::conj(t(k, l, a, b)));
            t.at(a, b, k, l) = avg;
            t.at(k, l, a, b) = std::conj(avg);
          }
        }
  return t;
}

CouplingTensors coupling_tensors(const SupermodeBasis& basis) {
  return CouplingTensors{dispersion_matrix(basis), nonlinear_tensor(basis)};
}

std::vector<Monomial> TermGroup::monomials() const {
  const int n = D.rows() > 0 ? static_cast<int>(D.rows()) : C.n;
  std::map<std::array<int, 4>, cplx> quartic;
  std::vector<Monomial> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (D.size() > 0 && D(a, b) != 0.0) {
        out.push_back({D(a, b), {a}, {b}});
      }
    }
  if (!C.c.empty()) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            cplx c = C(a, b, k, l);
            if (c == 0.0) continue;
            std::array<int, 4> key{std::min(a, b), std::max(a, b),
                                   std::min(k, l), std::max(k, l)};
            quartic[key] -= c;  // H has -C a^dag a^dag a a
          }
    for (const auto& [key, c] : quartic) {
      if (c == 0.0) continue;
      out.push_back({c, {key[0], key[1]}, {key[2], key[3]}});
    }
  }
  return out;
}

namespace {

NonlinearTensor zero_like(const NonlinearTensor& c) {
  NonlinearTensor t;
  t.n = c.n;
  t.c.assign(c.c.size(), cplx(0.0));
  return t;
}

int zeros_in(int a, int b, int k, int l) {
  return (a == 0) + (b == 0) + (k == 0) + (l == 0);
}

}  // namespace

HamiltonianTerms assemble_terms(const CouplingTensors& tensors, double nbar) {
  const int n = static_cast<int>(tensors.D.rows());
  HamiltonianTerms terms;
  terms.nbar = nbar;
  terms.n_modes = n;
  MatC zd = MatC::Zero(n, n);
  for (TermGroup* g : {&terms.h_s, &terms.h_r, &terms.v1, &terms.v2,
                       &terms.v_others}) {
    g->D = zd;
    g->C = zero_like(tensors.C);
  }
  terms.h_s.label = "H_S";
  terms.h_r.label = "H_R";
  terms.v1.label = "V1";
  terms.v2.label = "V2";
  terms.v_others.label = "V_others";

  // Linear part.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const cplx d = tensors.D(a, b);
      if (a == 0 && b == 0)
        terms.h_s.D(a, b) = d;
      else if (a >= 1 && b >= 1)
        terms.h_r.D(a, b) = d;
      else
        terms.v1.D(a, b) = d;  // 0<->m couplings; nonzero only for m = 2
    }
  // Quartic part.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const cplx c = tensors.C(a, b, k, l);
          const int z = zeros_in(a, b, k, l);
          TermGroup* dest = &terms.v_others;
          if (z == 4)
            dest = &terms.h_s;
          else if (z == 0)
            dest = &terms.h_r;
          else if (z == 3)
            dest = &terms.v1;
          else if (z == 2 && ((a >= 1 && b >= 1) || (k >= 1 && l >= 1)))
            dest = &terms.v2;
          dest->C.at(a, b, k, l) = c;
        }

  // Residual check: the extracted V1 must coincide with its closed form
  // D_0m (1 - n0/nbar) a_m^dag a_0 + h.c., whose quartic coefficients are
  // C_00^{0m} = D_0m / (2 nbar).
  const double scale = tensors.D.cwiseAbs().maxCoeff();
  double max_dev = 0.0;
  for (int m = 1; m < n; ++m) {
    const cplx expect = terms.v1.D(0, m) / (2.0 * nbar);
    max_dev = std::max(max_dev, std::abs(terms.v1.C(0, 0, 0, m) - expect));
    max_dev = std::max(max_dev, std::abs(terms.v1.C(0, m, 0, 0) -
                                         std::conj(expect)));
  }
  require(max_dev <= 1e-9 * scale, ErrorCode::assembly_failure,
          "V1 partition residual exceeds tolerance");
  return terms;
}

std::vector<Monomial> HamiltonianTerms::selected(bool with_hs, bool with_hr,
                                                 bool with_v1, bool with_v2,
                                                 bool with_others) const {
  CouplingTensors t =
      selected_tensors(with_hs, with_hr, with_v1, with_v2, with_others);
  TermGroup g;
  g.D = t.D;
  g.C = t.C;
  return g.monomials();
}

CouplingTensors HamiltonianTerms::selected_tensors(bool with_hs, bool with_hr,
                                                   bool with_v1, bool with_v2,
                                                   bool with_others) const {
  CouplingTensors t;
  t.D = MatC::Zero(n_modes, n_modes);
  t.C = zero_like(h_s.C);
  auto add = [&](const TermGroup& g) {
    t.D += g.D;
    for (size_t i = 0; i < t.C.c.size(); ++i) t.C.c[i] += g.C.c[i];
  };
  if (with_hs) add(h_s);
  if (with_hr) add(h_r);
  if (with_v1) add(v1);
  if (with_v2) add(v2);
  if (with_others) add(v_others);
  return t;
}

}  // namespace sq
