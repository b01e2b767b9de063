#include <cmath>

#include "fock.hpp"

namespace sq {

FockBasis::FockBasis(int num_modes, int per_mode_cutoff, int max_total)
    : num_modes_(num_modes), cutoff_(per_mode_cutoff) {
  require(num_modes >= 1 && num_modes <= 10, ErrorCode::invalid_argument,
          "num_modes must be in [1, 10]");
  require(per_mode_cutoff >= 1 && per_mode_cutoff <= 1024,
          ErrorCode::invalid_argument, "per_mode_cutoff must be in [1, 1024]");
  if (max_total < 0) max_total = per_mode_cutoff - 1;
  sectors_.resize(max_total + 1);

  // Lexicographic enumeration of tuples with fixed total.
  Occupation occ(num_modes, 0);
  for (int total = 0; total <= max_total; ++total) {
    auto recurse = [&](auto&& self, int mode, int remaining) -> void {
      if (mode == num_modes - 1) {
        if (remaining < per_mode_cutoff) {
          occ[mode] = remaining;
          sectors_[total].push_back(occ);
        }
        return;
      }
      for (int v = 0; v <= std::min(remaining, per_mode_cutoff - 1); ++v) {
        occ[mode] = v;
        self(self, mode + 1, remaining - v);
      }
    };
    recurse(recurse, 0, total);
  }
  for (const auto& sector : sectors_) {
    for (size_t i = 0; i < sector.size(); ++i) {
      index_[pack(sector[i])] = static_cast<int>(i);
    }
  }
}

std::uint64_t FockBasis::pack(const Occupation& occ) {
  std::uint64_t key = 0;
  for (int v : occ) key = key * 1025u + static_cast<std::uint64_t>(v) + 1u;
  return key;
}

int FockBasis::index_of(const Occupation& occ) const {
  auto it = index_.find(pack(occ));
  return it == index_.end() ? -1 : it->second;
}

double SectorFockState::norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += c.squaredNorm();
  return std::sqrt(s);
}

void SectorFockState::normalize() {
  const double n = norm();
  require(n > 0.0, ErrorCode::invalid_argument, "cannot normalize null state");
  for (auto& c : coeffs) c /= n;
}

SectorFockState coherent_state(double nbar, const FockBasis& basis,
                               double tail_tol) {
  require(nbar >= 0.0, ErrorCode::invalid_argument, "nbar must be >= 0");
  SectorFockState psi;
  psi.basis = &basis;
  psi.coeffs.resize(basis.num_sectors());

  // Coherent amplitudes in mode 0 built by the stable log-weight recursion
  // c_n = alpha^n e^{-|alpha|^2/2} / sqrt(n!), alpha = sqrt(nbar).
  const int nmax = basis.num_sectors() - 1;
  std::vector<double> amp(nmax + 1);
  double log_w = -0.5 * nbar;  // log c_0
  double kept = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) log_w += 0.5 * (std::log(nbar) - std::log(double(n)));
    amp[n] = std::exp(log_w);
    kept += amp[n] * amp[n];
  }
  const double tail = 1.0 - kept;
  require(tail <= tail_tol, ErrorCode::cutoff_too_small,
          "coherent state truncated tail mass " + std::to_string(tail) +
              " exceeds tolerance");

  Occupation occ(basis.num_modes(), 0);
  for (int n = 0; n <= nmax; ++n) {
    psi.coeffs[n] = VecC::Zero(basis.sector_dim(n));
    occ[0] = n;
    const int idx = basis.index_of(occ);
    if (idx >= 0) psi.coeffs[n][idx] = amp[n];
  }
  psi.normalize();
  return psi;
}

}  // namespace sq
