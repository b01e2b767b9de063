#include <cmath>
#include <vector>

#include "fock.hpp"

namespace sq {

namespace {

// <m|D(beta)|n> for m >= n equals
//   sqrt(n!/m!) beta^{m-n} e^{-|beta|^2/2} L_n^{(m-n)}(|beta|^2),
// and <m|D|n> = conj(<n|D(-beta)|m>) below the diagonal. The parity
// identity D(a) Pi D^dag(a) = D(2a) Pi reduces the displaced-parity trace
// to matrix elements of a single displacement, which stays exact under
// Fock truncation of rho.
struct DisplacementTable {
  int dim;
  std::vector<double> lfact;  // log n!
  std::vector<double> lag;    // L_n^{(k)}(x) at lag[n * dim + k]

  explicit DisplacementTable(int d) : dim(d), lfact(d), lag(size_t(d) * d) {
    lfact[0] = 0.0;
    for (int n = 1; n < d; ++n) lfact[n] = lfact[n - 1] + std::log(double(n));
  }

  void tabulate(double x) {
    for (int k = 0; k < dim; ++k) {
      double lm1 = 0.0, l = 1.0;  // L_0 = 1
      lag[k] = 1.0;
      for (int n = 0; n + 1 < dim; ++n) {
        double next = ((2.0 * n + k + 1.0 - x) * l - (n + k) * lm1) / (n + 1.0);
        lm1 = l;
        l = next;
        lag[size_t(n + 1) * dim + k] = l;
      }
    }
  }

  cplx element(int m, int n, cplx beta, double babs2) const {
    const bool flip = m < n;
    if (flip) std::swap(m, n);
    const int k = m - n;
    if (babs2 == 0.0) return (k == 0) ? cplx(1.0, 0.0) : cplx(0.0);
    const double lg = lag[size_t(n) * dim + k];
    const double ln_mag = 0.5 * (lfact[n] - lfact[m]) +
                          0.5 * k * std::log(babs2) - 0.5 * babs2 +
                          std::log(std::abs(lg) + 1e-300);
    cplx phase = std::pow(beta / std::sqrt(babs2), k);
    cplx val = phase * std::copysign(std::exp(ln_mag), lg);
    if (flip) {
      // <m'|D|n'> with m' < n': conjugate of the mirrored element at -beta.
      val = std::conj(val) * ((k % 2 == 0) ? 1.0 : -1.0);
    }
    return val;
  }
};

}  // namespace

MatR wigner(const MatC& rho, const VecR& xs, const VecR& ps) {
  const int dim = static_cast<int>(rho.rows());
  require(rho.cols() == dim && dim >= 1, ErrorCode::dimension_mismatch,
          "density matrix must be square");
  DisplacementTable table(dim);
  MatR out(xs.size(), ps.size());
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    for (Eigen::Index j = 0; j < ps.size(); ++j) {
      // W(x, p) = (1/pi) Tr[rho D(2 alpha) Pi], alpha = (x + i p)/sqrt(2).
      const cplx beta = std::sqrt(2.0) * cplx(xs[i], ps[j]);
      const double babs2 = std::norm(beta);
      table.tabulate(babs2);
      cplx w = 0.0;
      for (int n = 0; n < dim; ++n) {
        const double sgn = (n % 2 == 0) ? 1.0 : -1.0;
        for (int m = 0; m < dim; ++m) {
          if (rho(n, m) == cplx(0.0)) continue;
          w += rho(n, m) * sgn * table.element(m, n, beta, babs2);
        }
      }
      out(i, j) = w.real() / pi;
    }
  }
  return out;
}

}  // namespace sq
