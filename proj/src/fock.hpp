#pragma once

#include <Eigen/Sparse>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "grid.hpp"
#include "lsm.hpp"

namespace sq {

using Occupation = std::vector<int>;
using SpMatC = Eigen::SparseMatrix<cplx>;

// Multimode truncated Fock space organized in total-photon-number sectors.
// Occupations run from 0 to per_mode_cutoff - 1; sector N enumerates all
// tuples summing to N in lexicographic order.
class FockBasis {
 public:
  FockBasis(int num_modes, int per_mode_cutoff, int max_total = -1);

  int num_modes() const { return num_modes_; }
  int per_mode_cutoff() const { return cutoff_; }
  int num_sectors() const { return static_cast<int>(sectors_.size()); }
  int sector_dim(int n) const { return static_cast<int>(sectors_[n].size()); }
  const std::vector<Occupation>& sector(int n) const { return sectors_[n]; }
  // Index of a tuple inside its sector, or -1 if truncated away.
  int index_of(const Occupation& occ) const;

  static std::uint64_t pack(const Occupation& occ);

 private:
  int num_modes_;
  int cutoff_;
  std::vector<std::vector<Occupation>> sectors_;
  std::unordered_map<std::uint64_t, int> index_;
};

// Pure state stored as one coefficient vector per sector.
struct SectorFockState {
  const FockBasis* basis = nullptr;
  std::vector<VecC> coeffs;

  double norm() const;
  void normalize();
};

// Block-diagonal (number-conserving) operator: one sparse block per sector.
struct SectorOperator {
  const FockBasis* basis = nullptr;
  std::vector<SpMatC> blocks;
  bool hermitian = false;
};

// Coherent amplitude sqrt(nbar) in mode 0, vacuum elsewhere; truncated and
// renormalized. Errors if the truncated Poisson tail mass exceeds tail_tol.
SectorFockState coherent_state(double nbar, const FockBasis& basis,
                               double tail_tol = 1e-6);

SectorOperator build_hamiltonian(const std::vector<Monomial>& monomials,
                                 const FockBasis& basis);

double hermiticity_defect(const SectorOperator& op);

// Apply a block-diagonal operator.
SectorFockState apply(const SectorOperator& op, const SectorFockState& psi);
// Apply the annihilation operator of one mode (couples sector N+1 -> N).
SectorFockState apply_annihilation(int mode, const SectorFockState& psi);

cplx expectation(const SectorOperator& op, const SectorFockState& psi);
cplx mode_amplitude(int mode, const SectorFockState& psi);   // <a_mode>
double mode_population(int mode, const SectorFockState& psi);  // <a^dag a>

// Unitary evolution exp(-iHt) psi0 at each requested time. Sectors of
// dimension <= dense_threshold use exact eigendecomposition, larger ones a
// Lanczos-Krylov exponential with error control.
std::vector<SectorFockState> evolve_state(const SectorOperator& h,
                                          const SectorFockState& psi0,
                                          const std::vector<double>& times,
                                          int dense_threshold = 512,
                                          double krylov_tol = 1e-10);

// Reduced density matrix of one mode (partial trace over the others).
MatC reduced_density(const SectorFockState& psi, int mode);

// Wigner function by the displaced-parity formula on the tensor grid xs x ps;
// out(i, j) = W(xs[i], ps[j]) with alpha = (x + i p)/sqrt(2).
MatR wigner(const MatC& rho, const VecR& xs, const VecR& ps);

}  // namespace sq
