#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "gaussian.hpp"

namespace sq {

SqueezingSpectrum squeezing_spectrum(const GaussianState& state) {
  const int n = state.size();
  MatR sigma = quadrature_covariance(state);
  Eigen::SelfAdjointEigenSolver<MatR> eig(sigma);  // ascending eigenvalues

  SqueezingSpectrum out;
  for (int j = 0; j < n; ++j) {
    const double lambda = eig.eigenvalues()[j];
    require(lambda > 0.0, ErrorCode::tolerance_breach,
            "quadrature covariance is not positive definite");
    out.db.push_back(-10.0 * std::log10(2.0 * lambda));

    VecC shape = eig.eigenvectors().col(j).head(n).cast<cplx>() +
                 iu * eig.eigenvectors().col(j).tail(n).cast<cplx>();
    // Orthonormalize against the modes already collected.
    for (const VecC& prev : out.shapes) {
      shape -= prev.dot(shape) * prev;
    }
    const double norm = shape.norm();
    if (norm > 1e-10) {
      out.shapes.push_back(shape / norm);
    } else {
      out.shapes.push_back(VecC::Zero(n));
    }
  }
  // Ascending eigenvalues give descending dB directly.
  return out;
}

}  // namespace sq
