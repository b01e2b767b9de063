#include "grid.hpp"

#include <fftw3.h>

#include <mutex>

namespace sq {

SpatialGrid::SpatialGrid(double L, int Nz) {
  require(L > 0.0, ErrorCode::invalid_argument, "grid length must be positive");
  require(Nz >= 2 && (Nz & (Nz - 1)) == 0, ErrorCode::invalid_argument,
          "grid size must be a power of two");
  length = L;
  num_points = Nz;
}

VecR SpatialGrid::points() const {
  VecR z(num_points);
  for (int i = 0; i < num_points; ++i) z[i] = point(i);
  return z;
}

VecR SpatialGrid::wavenumbers() const {
  VecR k(num_points);
  const double dk = 2.0 * pi / length;
  for (int j = 0; j < num_points; ++j) {
    int m = j < num_points / 2 ? j : j - num_points;
    k[j] = dk * m;
  }
  return k;
}

SpatialGrid SpatialGrid::standard(double nbar, int Nz) {
  require(nbar > 0.0, ErrorCode::invalid_argument, "nbar must be positive");
  return SpatialGrid(80.0 / nbar, Nz);
}

namespace {

// FFTW planning is not thread-safe; execution of a cached plan is.
std::mutex plan_mutex;

void run_fft(const VecC& in, VecC& out, int sign) {
  const int n = static_cast<int>(in.size());
  out.resize(n);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
        reinterpret_cast<fftw_complex*>(out.data()), sign,
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace

VecC fft(const VecC& f) {
  VecC out;
  run_fft(f, out, FFTW_FORWARD);
  return out;
}

VecC ifft(const VecC& f) {
  VecC out;
  run_fft(f, out, FFTW_BACKWARD);
  out /= static_cast<double>(f.size());
  return out;
}

VecC spectral_deriv(const SpatialGrid& g, const VecC& f) {
  VecC fh = fft(f);
  const VecR k = g.wavenumbers();
  for (int j = 0; j < g.num_points; ++j) fh[j] *= iu * k[j];
  return ifft(fh);
}

VecC spectral_deriv2(const SpatialGrid& g, const VecC& f) {
  VecC fh = fft(f);
  const VecR k = g.wavenumbers();
  for (int j = 0; j < g.num_points; ++j) fh[j] *= -k[j] * k[j];
  return ifft(fh);
}

VecC momentum_apply(const SpatialGrid& g, const VecC& f) {
  VecC fh = fft(f);
  const VecR k = g.wavenumbers();
  for (int j = 0; j < g.num_points; ++j) fh[j] *= k[j];
  return ifft(fh);
}

}  // namespace sq
