#include <cmath>

#include "fock.hpp"

namespace sq {

namespace {

// Apply a normal-ordered monomial to an occupation tuple; returns the target
// tuple and the combinatorial amplitude, or amplitude 0 if annihilated.
double apply_monomial(const Monomial& mono, Occupation& occ, int cutoff) {
  double amp = 1.0;
  for (int m : mono.annihilates) {
    if (occ[m] == 0) return 0.0;
    amp *= std::sqrt(double(occ[m]));
    --occ[m];
  }
  for (int m : mono.creates) {
    if (occ[m] + 1 >= cutoff) return 0.0;
    ++occ[m];
    amp *= std::sqrt(double(occ[m]));
  }
  return amp;
}

}  // namespace

SectorOperator build_hamiltonian(const std::vector<Monomial>& monomials,
                                 const FockBasis& basis) {
  for (const auto& mono : monomials) {
    require(mono.creates.size() == mono.annihilates.size(),
            ErrorCode::invalid_argument,
            "monomials must conserve total photon number");
    for (int m : mono.creates)
      require(m >= 0 && m < basis.num_modes(), ErrorCode::dimension_mismatch,
              "monomial touches a mode outside the basis");
    for (int m : mono.annihilates)
      require(m >= 0 && m < basis.num_modes(), ErrorCode::dimension_mismatch,
              "monomial touches a mode outside the basis");
  }

  SectorOperator op;
  op.basis = &basis;
  op.hermitian = true;
  op.blocks.resize(basis.num_sectors());
  std::vector<Eigen::Triplet<cplx>> triplets;
  for (int s = 0; s < basis.num_sectors(); ++s) {
    const auto& states = basis.sector(s);
    const int dim = static_cast<int>(states.size());
    triplets.clear();
    for (int col = 0; col < dim; ++col) {
      for (const auto& mono : monomials) {
        Occupation occ = states[col];
        const double amp = apply_monomial(mono, occ, basis.per_mode_cutoff());
        if (amp == 0.0) continue;
        const int row = basis.index_of(occ);
        if (row < 0) continue;
        triplets.emplace_back(row, col, amp * mono.coeff);
      }
    }
    op.blocks[s].resize(dim, dim);
    op.blocks[s].setFromTriplets(triplets.begin(), triplets.end());
  }
  return op;
}

double hermiticity_defect(const SectorOperator& op) {
  double defect = 0.0;
  for (const auto& block : op.blocks) {
    SpMatC diff = SpMatC(block.adjoint()) - block;
    for (int k = 0; k < diff.outerSize(); ++k)
      for (SpMatC::InnerIterator it(diff, k); it; ++it)
        defect = std::max(defect, std::abs(it.value()));
  }
  return defect;
}

SectorFockState apply(const SectorOperator& op, const SectorFockState& psi) {
  require(op.basis == psi.basis, ErrorCode::dimension_mismatch,
          "operator and state bases differ");
  SectorFockState out;
  out.basis = psi.basis;
  out.coeffs.resize(psi.coeffs.size());
  for (size_t s = 0; s < psi.coeffs.size(); ++s) {
    out.coeffs[s] = op.blocks[s] * psi.coeffs[s];
  }
  return out;
}

SectorFockState apply_annihilation(int mode, const SectorFockState& psi) {
  const FockBasis& basis = *psi.basis;
  SectorFockState out;
  out.basis = psi.basis;
  out.coeffs.resize(psi.coeffs.size());
  for (int s = 0; s < basis.num_sectors(); ++s) {
    out.coeffs[s] = VecC::Zero(basis.sector_dim(s));
  }
  for (int s = 1; s < basis.num_sectors(); ++s) {
    const auto& states = basis.sector(s);
    for (size_t i = 0; i < states.size(); ++i) {
      if (states[i][mode] == 0) continue;
      Occupation occ = states[i];
      const double amp = std::sqrt(double(occ[mode]));
      --occ[mode];
      const int idx = basis.index_of(occ);
      if (idx >= 0) out.coeffs[s - 1][idx] += amp * psi.coeffs[s][i];
    }
  }
  return out;
}

cplx expectation(const SectorOperator& op, const SectorFockState& psi) {
  cplx s = 0.0;
  for (size_t b = 0; b < psi.coeffs.size(); ++b) {
    s += psi.coeffs[b].dot(op.blocks[b] * psi.coeffs[b]);
  }
  return s;
}

cplx mode_amplitude(int mode, const SectorFockState& psi) {
  SectorFockState lowered = apply_annihilation(mode, psi);
  cplx s = 0.0;
  for (size_t b = 0; b < psi.coeffs.size(); ++b) {
    s += psi.coeffs[b].dot(lowered.coeffs[b]);
  }
  return s;
}

double mode_population(int mode, const SectorFockState& psi) {
  const FockBasis& basis = *psi.basis;
  double total = 0.0;
  for (int s = 0; s < basis.num_sectors(); ++s) {
    const auto& states = basis.sector(s);
    for (size_t i = 0; i < states.size(); ++i) {
      total += states[i][mode] * std::norm(psi.coeffs[s][i]);
    }
  }
  return total;
}

}  // namespace sq
