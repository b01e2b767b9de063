#pragma once

#include <vector>

#include "grid.hpp"
#include "soliton.hpp"

namespace sq {

// Orthonormal Lanczos supermode basis built from the Krylov space of the
// momentum operator A = -i d/dz seeded with the soliton supermode u0.
struct SupermodeBasis {
  MatC modes;  // num_points x n_lsm, column n holds u_n(z_i)
  SpatialGrid grid;
  double nbar = 0.0;
  std::vector<double> alphas;  // Lanczos diagonal recurrence coefficients
  std::vector<double> betas;   // off-diagonal coefficients, betas[n] couples n and n+1

  int size() const { return static_cast<int>(modes.cols()); }
  VecC mode(int n) const { return modes.col(n); }
};

SupermodeBasis build_supermodes(const VecC& u0, const SpatialGrid& grid,
                                double nbar, int n_lsm);

// Rank-4 four-wave-mixing tensor C_nm^kl = (1/2) sum u_n* u_m* u_k u_l dz,
// stored flat with index ((n*N + m)*N + k)*N + l.
struct NonlinearTensor {
  int n = 0;
  std::vector<cplx> c;

  cplx operator()(int a, int b, int k, int l) const {
    return c[((static_cast<size_t>(a) * n + b) * n + k) * n + l];
  }
  cplx& at(int a, int b, int k, int l) {
    return c[((static_cast<size_t>(a) * n + b) * n + k) * n + l];
  }
};

struct CouplingTensors {
  MatC D;            // Hermitian dispersion matrix, D_nm = -1/2 int u_n* d2z u_m
  NonlinearTensor C;
};

MatC dispersion_matrix(const SupermodeBasis& basis);
// TOD correction to the linear coupling matrix for scaled parameter beta3:
// matrix elements of -pi*beta3/(2*nbar) * (spectral k^3) in the LSM basis.
MatC tod_dispersion_matrix(const SupermodeBasis& basis, double beta3);
NonlinearTensor nonlinear_tensor(const SupermodeBasis& basis);
CouplingTensors coupling_tensors(const SupermodeBasis& basis);

// Normal-ordered, number-conserving monomial: prod a_n'^dag * prod a_n.
struct Monomial {
  cplx coeff;
  std::vector<int> creates;
  std::vector<int> annihilates;
};

// A labeled group of Hamiltonian terms, carried both as masked (D, C) tensor
// content and as an expanded monomial list.
struct TermGroup {
  std::string label;
  MatC D;
  NonlinearTensor C;
  std::vector<Monomial> monomials() const;
};

// Partition of the full LSM Hamiltonian into H_S, H_R, V1, V2 and the
// remainder V_others. Groups sum to the full (D, C) content exactly.
struct HamiltonianTerms {
  double nbar = 0.0;
  int n_modes = 0;
  TermGroup h_s, h_r, v1, v2, v_others;

  // Sum of the selected groups as a monomial list.
  std::vector<Monomial> selected(bool with_hs, bool with_hr, bool with_v1,
                                 bool with_v2, bool with_others) const;
  std::vector<Monomial> all() const { return selected(true, true, true, true, true); }
  // Effective (D, C) content of the selected groups, for Gaussian evolution.
  CouplingTensors selected_tensors(bool with_hs, bool with_hr, bool with_v1,
                                   bool with_v2, bool with_others) const;
};

HamiltonianTerms assemble_terms(const CouplingTensors& tensors, double nbar);

}  // namespace sq
