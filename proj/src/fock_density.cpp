#include <unordered_map>

#include "fock.hpp"

namespace sq {

MatC reduced_density(const SectorFockState& psi, int mode) {
  const FockBasis& basis = *psi.basis;
  require(mode >= 0 && mode < basis.num_modes(), ErrorCode::invalid_argument,
          "mode index out of range");
  const int cutoff = basis.per_mode_cutoff();

  // Group amplitudes by the occupation tuple of all other modes; each group
  // contributes an outer product over the traced mode's occupation.
  std::unordered_map<std::uint64_t, VecC> groups;
  for (int s = 0; s < basis.num_sectors(); ++s) {
    const auto& states = basis.sector(s);
    for (size_t i = 0; i < states.size(); ++i) {
      const cplx amp = psi.coeffs[s][i];
      if (amp == 0.0) continue;
      Occupation rest = states[i];
      const int n = rest[mode];
      rest[mode] = 0;
      auto [it, fresh] = groups.try_emplace(FockBasis::pack(rest));
      if (fresh) it->second = VecC::Zero(cutoff);
      it->second[n] += amp;
    }
  }

  MatC rho = MatC::Zero(cutoff, cutoff);
  for (const auto& [key, vec] : groups) {
    rho.noalias() += vec * vec.adjoint();
  }
  return rho;
}

}  // namespace sq
