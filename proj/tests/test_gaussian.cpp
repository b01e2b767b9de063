#include <doctest.h>

#include <cmath>
#include <random>

#include "gaussian.hpp"
#include "me.hpp"
#include "soliton.hpp"

using namespace sq;

namespace {

// Random pure Gaussian state: vacuum pushed through a Bogoliubov transform
// a -> U a + V a^dag with U = R1 cosh(r) R2, V = R1 sinh(r) conj(R2).
GaussianState random_state(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  auto random_unitary = [&] {
    MatC a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
    }
    return MatC(Eigen::HouseholderQR<MatC>(a).householderQ());
  };
  MatC r1 = random_unitary(), r2 = random_unitary();
  VecR ch(n), sh(n);
  std::uniform_real_distribution<double> u(0.0, 0.8);
  for (int i = 0; i < n; ++i) {
    const double r = u(rng);
    ch[i] = std::cosh(r);
    sh[i] = std::sinh(r);
  }
  MatC bu = r1 * ch.asDiagonal() * r2;
  MatC bv = r1 * sh.asDiagonal() * r2.conjugate();

  GaussianState s;
  s.basis = GaussianBasis::lsm;
  s.mu = VecC(n);
  for (int i = 0; i < n; ++i) s.mu[i] = cplx(g(rng), g(rng));
  s.nmat = bv.conjugate() * bv.transpose();
  s.mmat = bu * bv.transpose();
  return s;
}

SupermodeBasis standard_basis(double nbar, int n_lsm, int nz = 2048) {
  SpatialGrid grid = SpatialGrid::standard(nbar, nz);
  SolitonParams params(nbar);
  return build_supermodes(soliton_supermode(params, grid), grid, nbar, n_lsm);
}

}  // namespace

TEST_CASE("initial Gaussian state is a pure coherent soliton") {
  GaussianState s = init_gaussian(25.0, 4);
  CHECK(total_photons(s) == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(std::abs(s.mu[0] - 5.0) < 1e-12);
  VecR nu = symplectic_eigenvalues(s);
  for (int i = 0; i < nu.size(); ++i) {
    CHECK(nu[i] == doctest::Approx(0.5).epsilon(1e-10));
  }
  CHECK(symplectic_residual(s) < 1e-12);
}

TEST_CASE("symplectic eigenvalues of a thermal state") {
  GaussianState s;
  s.basis = GaussianBasis::lsm;
  s.mu = VecC::Zero(3);
  s.nmat = 0.7 * MatC::Identity(3, 3);
  s.mmat = MatC::Zero(3, 3);
  VecR nu = symplectic_eigenvalues(s);
  for (int i = 0; i < nu.size(); ++i) {
    CHECK(nu[i] == doctest::Approx(1.2).epsilon(1e-10));
  }
  CHECK(symplectic_residual(s) > 1.0);  // far from pure
}

TEST_CASE("squeezed vacuum reports 8.686 dB per unit of r") {
  const double r = 1.0;
  GaussianState s;
  s.basis = GaussianBasis::lsm;
  s.mu = VecC::Zero(2);
  s.nmat = MatC::Zero(2, 2);
  s.mmat = MatC::Zero(2, 2);
  s.nmat(0, 0) = std::sinh(r) * std::sinh(r);
  s.mmat(0, 0) = -std::sinh(r) * std::cosh(r);
  SqueezingSpectrum sq = squeezing_spectrum(s);
  CHECK(sq.db[0] == doctest::Approx(20.0 * r / std::log(10.0)).epsilon(1e-9));
  CHECK(sq.db[1] == doctest::Approx(0.0).epsilon(1e-9));
  // Most-squeezed shape lives in mode 0.
  CHECK(std::abs(sq.shapes[0][0]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("supermode projection against a quadrature-form oracle") {
  const int n = 5;
  GaussianState s = random_state(n, 11);
  std::mt19937 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  VecC v(n);
  for (int i = 0; i < n; ++i) v[i] = cplx(g(rng), g(rng));
  v /= v.norm();

  SupermodeProjection proj = project_supermode(s, v);
  CHECK(std::abs(proj.amplitude - v.dot(s.mu)) < 1e-12);

  // Oracle: map a0 = v^dag a to quadratures and contract the covariance.
  MatR sigma = quadrature_covariance(s);
  VecR wx(2 * n), wp(2 * n);
  for (int j = 0; j < n; ++j) {
    wx[j] = v[j].real();
    wx[n + j] = v[j].imag();
    wp[j] = -v[j].imag();
    wp[n + j] = v[j].real();
  }
  const double var_x = wx.dot(sigma * wx);
  const double var_p = wp.dot(sigma * wp);
  const double photons =
      0.5 * (var_x + var_p - 1.0) + std::norm(v.dot(s.mu));
  CHECK(proj.photons == doctest::Approx(photons).epsilon(1e-10));

  // Exact u0-mode coherent field recovers (sqrt(nbar), nbar).
  GaussianState coh = init_gaussian(9.0, n);
  VecC e0 = VecC::Zero(n);
  e0[0] = 1.0;
  SupermodeProjection p0 = project_supermode(coh, e0);
  CHECK(std::abs(p0.amplitude - 3.0) < 1e-12);
  CHECK(p0.photons == doctest::Approx(9.0).epsilon(1e-12));
  // Orthogonal-mode excitation contributes nothing.
  VecC e1 = VecC::Zero(n);
  e1[1] = 1.0;
  CHECK(std::abs(project_supermode(coh, e1).amplitude) < 1e-12);
  CHECK(project_supermode(coh, e1).photons == doctest::Approx(0.0));
}

TEST_CASE("linear (C = 0) evolution matches the matrix-exponential map") {
  const int n = 3;
  CouplingTensors ct;
  MatC d(n, n);
  d << cplx(1.0, 0.0), cplx(0.3, 0.1), cplx(0.0, -0.2),
       cplx(0.3, -0.1), cplx(-0.5, 0.0), cplx(0.4, 0.0),
       cplx(0.0, 0.2), cplx(0.4, 0.0), cplx(2.0, 0.0);
  ct.D = d;
  ct.C.n = n;
  ct.C.c.assign(size_t(n) * n * n * n, cplx(0.0, 0.0));

  GaussianState s = random_state(n, 21);
  GaussianState s0 = s;
  const double t = 0.7;
  evolve_gaussian_lsm(ct, s, {t}, 1e-3);

  Eigen::SelfAdjointEigenSolver<MatC> es(d);
  VecC ph(n);
  for (int j = 0; j < n; ++j) ph[j] = std::exp(-iu * es.eigenvalues()[j] * t);
  MatC u = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  CHECK((s.mu - u * s0.mu).cwiseAbs().maxCoeff() < 1e-8);
  CHECK((s.nmat - u.conjugate() * s0.nmat * u.transpose())
            .cwiseAbs()
            .maxCoeff() < 1e-8);
  CHECK((s.mmat - u * s0.mmat * u.transpose()).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("LSM closure conserves photons and purity") {
  const double nbar = 25.0;
  SupermodeBasis basis = standard_basis(nbar, 3);
  CouplingTensors ct = coupling_tensors(basis);
  GaussianState s = init_gaussian(nbar, 3);
  const double t0 = soliton_period(nbar);

  double max_drift = 0.0, max_resid = 0.0;
  const double n_init = total_photons(s);
  auto obs = [&](double, const GaussianState& st) {
    max_drift = std::max(max_drift, std::abs(total_photons(st) - n_init));
    max_resid = std::max(max_resid, symplectic_residual(st));
  };
  std::vector<double> times;
  for (int i = 0; i <= 30; ++i) times.push_back(3.0 * t0 * i / 30.0);
  evolve_gaussian_lsm(ct, s, times, t0 / 2000.0, obs);
  CHECK(max_drift < 1e-7);
  CHECK(max_resid < 4e-6);  // bounds max |nu - 1/2| by ~resid/4
}

TEST_CASE("single-mode closure agrees with the one-mode LSM closure") {
  const double nbar = 25.0;
  const double c1 = nbar * nbar / 24.0, c2 = -nbar / 12.0;
  CouplingTensors ct;
  ct.D = MatC::Constant(1, 1, c1);
  ct.C.n = 1;
  ct.C.c.assign(1, cplx(-c2, 0.0));

  const double t0 = soliton_period(nbar);
  std::vector<double> times = {0.0, 0.3 * t0, 0.7 * t0};
  std::vector<cplx> single =
      evolve_gaussian_single_mode(c1, c2, 0.0, std::sqrt(nbar), times,
                                  t0 / 4000.0);

  GaussianState s = init_gaussian(nbar, 1);
  std::vector<cplx> multi;
  evolve_gaussian_lsm(ct, s, times, t0 / 4000.0,
                      [&](double, const GaussianState& st) {
                        multi.push_back(st.mu[0]);
                      });
  for (size_t i = 0; i < times.size(); ++i) {
    CHECK(std::abs(single[i] - multi[i]) < 1e-8 * std::sqrt(nbar));
  }
}

TEST_CASE("GSSF conserves photons and holds the soliton fixed point") {
  const double nbar = 25.0;
  SpatialGrid grid = SpatialGrid::standard(nbar, 512);
  SolitonParams params(nbar);
  GaussianState s = init_gaussian_grid(grid, soliton_profile(params, grid, 0.0));
  const double n_init = total_photons(s);
  CHECK(n_init == doctest::Approx(nbar).epsilon(1e-8));

  const double t0 = params.T0;
  std::vector<double> times = {0.0, 0.1 * t0, 0.2 * t0};
  double max_drift = 0.0;
  VecC u0 = soliton_supermode(params, grid);
  std::vector<cplx> amps;
  evolve_gssf(grid, nbar, 0.0, s, times, t0 / 2000.0,
              [&](double, const GaussianState& st) {
                max_drift =
                    std::max(max_drift, std::abs(total_photons(st) - n_init));
                amps.push_back(project_supermode(st, u0).amplitude);
              });
  CHECK(max_drift / nbar < 1e-8);
  CHECK(std::abs(amps[0]) == doctest::Approx(std::sqrt(nbar)).epsilon(1e-9));
  // Mean field stays near the classical soliton; the small drop is the
  // physical evaporation into the reservoir modes.
  CHECK(std::abs(amps[2]) == doctest::Approx(std::sqrt(nbar)).epsilon(5e-3));
  // Accumulated phase tracks exp(i nbar^2 t / 8) to leading order.
  cplx ratio = amps[2] / std::abs(amps[2]);
  cplx expect = std::exp(iu * nbar * nbar * times[2] / 8.0);
  CHECK(std::abs(ratio - expect) < 0.05);
}

TEST_CASE("Strang splitting converges at second order") {
  const double nbar = 5.0;
  SpatialGrid grid = SpatialGrid::standard(nbar, 256);
  SolitonParams params(nbar);
  VecC phi = soliton_profile(params, grid, 0.0);
  const double t0 = params.T0;
  const double t = 0.05 * t0;

  auto run = [&](double dt) {
    GaussianState s = init_gaussian_grid(grid, phi);
    evolve_gssf(grid, nbar, 0.1, s, {t}, dt);
    return s;
  };
  GaussianState coarse = run(t / 32.0);
  GaussianState medium = run(t / 64.0);
  GaussianState fine = run(t / 1024.0);
  const double e1 = (coarse.mu - fine.mu).cwiseAbs().maxCoeff();
  const double e2 = (medium.mu - fine.mu).cwiseAbs().maxCoeff();
  CHECK(e1 / e2 > 3.2);
  CHECK(e1 / e2 < 5.2);
}

TEST_CASE("Fourier profile of the soliton supermode") {
  const double nbar = 5.0;
  SpatialGrid grid = SpatialGrid::standard(nbar);
  SolitonParams params(nbar);
  VecC hat = fourier_profile(grid, soliton_supermode(params, grid));
  VecR k = grid.wavenumbers();
  for (int j = 0; j < grid.num_points; j += 37) {
    const double expect =
        std::sqrt(pi / (2.0 * nbar)) / std::cosh(pi * k[j] / nbar);
    CHECK(std::abs(hat[j] - expect) < 1e-6);
  }
}

TEST_CASE("reservoir spectrum vanishes for a pure soliton-mode state") {
  const double nbar = 5.0;
  SpatialGrid grid = SpatialGrid::standard(nbar, 512);
  SolitonParams params(nbar);
  GaussianState s = init_gaussian_grid(grid, soliton_profile(params, grid, 0.0));
  VecC u0 = soliton_supermode(params, grid);
  VecR spec = reservoir_spectrum_grid(s, grid, u0);
  CHECK(spec.cwiseAbs().maxCoeff() < 1e-10);

  GaussianState lsm_state = init_gaussian(nbar, 4);
  SupermodeBasis basis = standard_basis(nbar, 4, 512);
  VecR spec_lsm = reservoir_spectrum_lsm(lsm_state, basis);
  CHECK(spec_lsm.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("mode-1 to mode-0 spectral weight at the phase-matched wavenumber") {
  const double nbar = 5.0, beta3 = 0.1;
  SupermodeBasis basis = standard_basis(nbar, 2);
  const double k0 = nbar * tod_phase_matching(beta3) / pi;
  VecC hat0 = fourier_profile(basis.grid, basis.mode(0));
  VecC hat1 = fourier_profile(basis.grid, basis.mode(1));
  VecR k = basis.grid.wavenumbers();
  int jbest = 0;
  for (int j = 1; j < k.size(); ++j) {
    if (std::abs(k[j] - k0) < std::abs(k[jbest] - k0)) jbest = j;
  }
  const double ratio = std::norm(hat1[jbest]) / std::norm(hat0[jbest]);
  CHECK(ratio ==
        doctest::Approx(12.0 / (pi * pi * beta3 * beta3)).epsilon(0.05));
}

TEST_CASE("dispersive loss window sums the in-band bins") {
  VecR k(5), spec(5);
  k << -2.0, -1.0, 0.0, 1.0, 2.0;
  spec << 1.0, 2.0, 4.0, 8.0, 16.0;
  CHECK(dispersive_loss(spec, k, 1.0, 1.0) == doctest::Approx(28.0));
  CHECK(dispersive_loss(spec, k, -2.0, 0.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS(dispersive_loss(spec, k, 0.0, -1.0), Error);
}
