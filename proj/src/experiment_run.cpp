#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "csv.hpp"
#include "experiment.hpp"
#include "fock.hpp"
#include "gaussian.hpp"
#include "me.hpp"
#include "soliton.hpp"

namespace sq {

namespace {

std::vector<double> sample_times(double t_max, int intervals = 120) {
  std::vector<double> times;
  if (t_max <= 0.0) {
    times.push_back(0.0);
    return times;
  }
  for (int i = 0; i <= intervals; ++i) times.push_back(t_max * i / intervals);
  return times;
}

cplx rotating_frame(double nbar, double t) {
  return std::exp(-iu * nbar * nbar * t / 8.0);
}

double poisson_tail(double nbar, int max_total) {
  double log_w = -nbar, kept = 0.0;
  for (int n = 0; n <= max_total; ++n) {
    if (n > 0) log_w += std::log(nbar) - std::log(double(n));
    kept += std::exp(log_w);
  }
  return std::max(0.0, 1.0 - kept);
}

struct Window {
  bool active = false;
  double k0 = 0.0, delta_k = 0.0;
};

Window make_window(const ExperimentConfig& cfg) {
  Window w;
  w.delta_k = cfg.window.delta_k_scaled * cfg.nbar / pi;
  if (cfg.window.k0_auto) {
    if (cfg.beta3 != 0.0) {
      w.k0 = cfg.nbar * tod_phase_matching(cfg.beta3) / pi;
      w.active = true;
    }
  } else {
    w.k0 = cfg.window.k0_scaled * cfg.nbar / pi;
    w.active = true;
  }
  return w;
}

void write_spectrum_csv(const std::string& path, const VecR& k, double nbar,
                        const VecR& spectrum) {
  CsvWriter csv(path, {"pik_over_nbar", "ck_dag_ck"});
  std::vector<int> order(k.size());
  for (size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return k[a] < k[b]; });
  for (int j : order) csv.row({pi * k[j] / nbar, spectrum[j]});
}

void write_wigner_csv(const std::string& path, const MatC& rho, double nbar) {
  const double r = 4.0 * std::sqrt(nbar + 1.0);
  const int np = 101;
  VecR xs(np), ps(np);
  for (int i = 0; i < np; ++i) xs[i] = ps[i] = -r + 2.0 * r * i / (np - 1);
  MatR w = wigner(rho, xs, ps);
  CsvWriter csv(path, {"x", "p", "W"});
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) csv.row({xs[i], ps[j], w(i, j)});
  }
}

void write_histogram_csv(const std::string& path, const VecR& pt,
                         const VecR& p0) {
  CsvWriter csv(path, {"n", "P_n_t", "P_n_0"});
  for (Eigen::Index n = 0; n < pt.size(); ++n) {
    csv.row({double(n), pt[n], p0[n]});
  }
}

void run_fock_lsm(const ExperimentConfig& cfg, const std::string& dir,
                  RunResult& res) {
  SpatialGrid grid(cfg.grid.l_scaled / cfg.nbar, cfg.grid.nz);
  SolitonParams params(cfg.nbar);
  VecC u0 = soliton_supermode(params, grid);
  SupermodeBasis basis = build_supermodes(u0, grid, cfg.nbar, cfg.n_lsm);
  HamiltonianTerms terms = assemble_terms(coupling_tensors(basis), cfg.nbar);
  std::vector<Monomial> mono = terms.selected(
      true, true, cfg.toggles.v1, cfg.toggles.v2, cfg.toggles.v_others);
  if (cfg.beta3 != 0.0) {
    TermGroup tod;
    tod.D = tod_dispersion_matrix(basis, cfg.beta3);
    tod.C = NonlinearTensor{};
    std::vector<Monomial> extra = tod.monomials();
    mono.insert(mono.end(), extra.begin(), extra.end());
  }

  FockBasis fb(cfg.n_lsm, cfg.per_mode_cutoff);
  res.cutoff_tail_mass = poisson_tail(cfg.nbar, cfg.per_mode_cutoff - 1);
  SectorFockState psi0 = coherent_state(cfg.nbar, fb, 1e-3);
  SectorOperator h = build_hamiltonian(mono, fb);

  const double t0 = params.T0;
  std::vector<double> times = sample_times(cfg.t_max_in_t0 * t0);
  std::vector<SectorFockState> states = evolve_state(h, psi0, times);

  MatC rho_first = reduced_density(states.front(), 0);
  MatC rho_last = rho_first;
  CsvWriter series(dir + "/series.csv",
                   {"t", "t_over_T0", "re_a0", "im_a0", "n0", "purity0"});
  for (size_t i = 0; i < times.size(); ++i) {
    const cplx amp =
        mode_amplitude(0, states[i]) * rotating_frame(cfg.nbar, times[i]);
    const double n0 = mode_population(0, states[i]);
    rho_last = reduced_density(states[i], 0);
    const double purity = std::real((rho_last * rho_last).trace());
    series.row({times[i], times[i] / t0, amp.real(), amp.imag(), n0, purity});
    if (i + 1 == times.size()) {
      res.final_n0 = n0;
      res.delta_n = cfg.nbar - n0;
    }
  }

  if (cfg.outputs.histogram) {
    write_histogram_csv(dir + "/histogram.csv",
                        rho_last.diagonal().real(),
                        rho_first.diagonal().real());
  }
  if (cfg.outputs.wigner) {
    write_wigner_csv(dir + "/wigner.csv", rho_last, cfg.nbar);
  }

  Window win = make_window(cfg);
  if (cfg.outputs.spectrum || win.active) {
    // One-body matrix <a_n^dag a_m> of the final state drives the spectrum.
    std::vector<SectorFockState> lowered;
    for (int m = 0; m < cfg.n_lsm; ++m) {
      lowered.push_back(apply_annihilation(m, states.back()));
    }
    GaussianState onebody;
    onebody.basis = GaussianBasis::lsm;
    onebody.mu = VecC::Zero(cfg.n_lsm);
    onebody.mmat = MatC::Zero(cfg.n_lsm, cfg.n_lsm);
    onebody.nmat = MatC(cfg.n_lsm, cfg.n_lsm);
    for (int n = 0; n < cfg.n_lsm; ++n) {
      for (int m = 0; m < cfg.n_lsm; ++m) {
        cplx s = 0.0;
        for (size_t b = 0; b < lowered[n].coeffs.size(); ++b) {
          s += lowered[n].coeffs[b].dot(lowered[m].coeffs[b]);
        }
        onebody.nmat(n, m) = s;
      }
    }
    VecR spec = reservoir_spectrum_lsm(onebody, basis);
    if (cfg.outputs.spectrum) {
      write_spectrum_csv(dir + "/spectrum.csv", basis.grid.wavenumbers(),
                         cfg.nbar, spec);
    }
    if (win.active) {
      res.dn3 = dispersive_loss(spec, basis.grid.wavenumbers(), win.k0,
                                win.delta_k);
    }
  }
}

void run_me_full(const ExperimentConfig& cfg, const std::string& dir,
                 RunResult& res) {
  const int cutoff = cfg.per_mode_cutoff;
  res.cutoff_tail_mass = poisson_tail(cfg.nbar, cutoff - 1);
  MatC rho0 =
      exact_diagonal_density(VecR::Zero(cutoff), std::sqrt(cfg.nbar), 0.0);

  MEGenerator gen;
  gen.nbar = cfg.nbar;
  gen.h_diag = VecR(cutoff);
  for (int n = 0; n < cutoff; ++n) gen.h_diag[n] = fock_energy(n, cfg.nbar);
  gen.lambda =
      lambda_matrix(cfg.nbar, SpectralResponse::hamiltonian_limit(), cutoff);

  const double t0 = soliton_period(cfg.nbar);
  std::vector<double> times = sample_times(cfg.t_max_in_t0 * t0);
  MEDiagnostics diag;
  std::vector<MatC> rhos = evolve_density_me(gen, rho0, times, {}, &diag);
  res.trace_drift = diag.max_trace_drift;
  res.physicality_margin = std::max(0.0, -diag.min_eigenvalue);

  MatC a_op = MatC::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a_op(n - 1, n) = std::sqrt(double(n));
  CsvWriter series(dir + "/series.csv",
                   {"t", "t_over_T0", "re_a0", "im_a0", "n0", "purity0"});
  for (size_t i = 0; i < times.size(); ++i) {
    const cplx amp =
        (rhos[i] * a_op).trace() * rotating_frame(cfg.nbar, times[i]);
    double n0 = 0.0;
    for (int n = 0; n < cutoff; ++n) n0 += n * std::real(rhos[i](n, n));
    const double purity = std::real((rhos[i] * rhos[i]).trace());
    series.row({times[i], times[i] / t0, amp.real(), amp.imag(), n0, purity});
    if (i + 1 == times.size()) {
      res.final_n0 = n0;
      res.delta_n = cfg.nbar - n0;
    }
  }
  if (cfg.outputs.histogram) {
    write_histogram_csv(dir + "/histogram.csv", rhos.back().diagonal().real(),
                        rho0.diagonal().real());
  }
  if (cfg.outputs.wigner) {
    write_wigner_csv(dir + "/wigner.csv", rhos.back(), cfg.nbar);
  }
}

void run_me_heff(const ExperimentConfig& cfg, const std::string& dir,
                 RunResult& res) {
  int cutoff = static_cast<int>(cfg.nbar + 12.0 * std::sqrt(cfg.nbar)) + 24;
  if (cfg.has_cutoff) cutoff = std::max(cutoff, cfg.per_mode_cutoff);
  res.cutoff_tail_mass = poisson_tail(cfg.nbar, cutoff - 2);
  VecR h = heff_diagonal(cfg.nbar, cutoff, cfg.toggles.omega_nbar);

  const double t0 = soliton_period(cfg.nbar);
  std::vector<double> times = sample_times(cfg.t_max_in_t0 * t0);
  std::vector<cplx> amps =
      exact_diagonal_evolution(h, std::sqrt(cfg.nbar), times);

  CsvWriter series(dir + "/series.csv",
                   {"t", "t_over_T0", "re_a0", "im_a0", "n0", "purity0"});
  for (size_t i = 0; i < times.size(); ++i) {
    const cplx amp = amps[i] * rotating_frame(cfg.nbar, times[i]);
    double loss = 0.0;
    if (cfg.beta3 != 0.0) {
      loss = tod_population_loss(cfg.nbar, cfg.beta3, times[i]);
    }
    series.row({times[i], times[i] / t0, amp.real(), amp.imag(),
                cfg.nbar - loss, 1.0});
    if (i + 1 == times.size()) {
      res.final_n0 = cfg.nbar - loss;
      res.delta_n = loss;
      res.dn3 = loss;
    }
  }
  if (cfg.outputs.histogram) {
    VecR p(cutoff);
    double log_w = -cfg.nbar;
    for (int n = 0; n < cutoff; ++n) {
      if (n > 0) log_w += std::log(cfg.nbar) - std::log(double(n));
      p[n] = std::exp(log_w);
    }
    write_histogram_csv(dir + "/histogram.csv", p, p);
  }
}

void run_gaussian_lsm(const ExperimentConfig& cfg, const std::string& dir,
                      RunResult& res) {
  SpatialGrid grid(cfg.grid.l_scaled / cfg.nbar, cfg.grid.nz);
  SolitonParams params(cfg.nbar);
  VecC u0 = soliton_supermode(params, grid);
  SupermodeBasis basis = build_supermodes(u0, grid, cfg.nbar, cfg.n_lsm);
  HamiltonianTerms terms = assemble_terms(coupling_tensors(basis), cfg.nbar);
  CouplingTensors sel = terms.selected_tensors(
      true, true, cfg.toggles.v1, cfg.toggles.v2, cfg.toggles.v_others);
  if (cfg.beta3 != 0.0) sel.D += tod_dispersion_matrix(basis, cfg.beta3);

  GaussianState state = init_gaussian(cfg.nbar, cfg.n_lsm);
  const double t0 = params.T0;
  std::vector<double> times = sample_times(cfg.t_max_in_t0 * t0);
  Window win = make_window(cfg);

  CsvWriter series(dir + "/series.csv", {"t_over_T0", "re_a0", "im_a0", "n0",
                                         "sq1_db", "sq2_db", "dn3"});
  VecR last_spec;
  evolve_gaussian_lsm(
      sel, state, times, cfg.dt_in_t0 * t0,
      [&](double t, const GaussianState& s) {
        const cplx amp = s.mu[0] * rotating_frame(cfg.nbar, t);
        const double n0 = std::norm(s.mu[0]) + std::real(s.nmat(0, 0));
        SqueezingSpectrum sq = squeezing_spectrum(s);
        double dn3 = 0.0;
        if (win.active) {
          last_spec = reservoir_spectrum_lsm(s, basis);
          dn3 = dispersive_loss(last_spec, basis.grid.wavenumbers(), win.k0,
                                win.delta_k);
        }
        const VecR nus = symplectic_eigenvalues(s);
        res.physicality_margin =
            std::max(res.physicality_margin,
                     (nus.array() - 0.5).abs().maxCoeff());
        series.row({t / t0, amp.real(), amp.imag(), n0, sq.db[0],
                    sq.db.size() > 1 ? sq.db[1] : 0.0, dn3});
        res.final_n0 = n0;
        res.delta_n = cfg.nbar - n0;
        res.dn3 = dn3;
      });

  if (cfg.outputs.spectrum) {
    VecR spec = reservoir_spectrum_lsm(state, basis);
    write_spectrum_csv(dir + "/spectrum.csv", basis.grid.wavenumbers(),
                       cfg.nbar, spec);
  }
}

void run_gssf(const ExperimentConfig& cfg, const std::string& dir,
              RunResult& res) {
  SpatialGrid grid(cfg.grid.l_scaled / cfg.nbar, cfg.grid.nz);
  SolitonParams params(cfg.nbar);
  VecC phi0 = soliton_profile(params, grid, 0.0);
  VecC u0 = soliton_supermode(params, grid);
  GaussianState state = init_gaussian_grid(grid, phi0);

  // Squeezing is reported in the supermode subspace; the full-grid
  // decomposition is out of reach at every output step.
  const int n_proj = cfg.has_n_lsm ? cfg.n_lsm : 8;
  SupermodeBasis basis = build_supermodes(u0, grid, cfg.nbar, n_proj);
  MatC proj = std::sqrt(grid.dz()) * basis.modes.adjoint();

  const double t0 = params.T0;
  std::vector<double> times = sample_times(cfg.t_max_in_t0 * t0);
  Window win = make_window(cfg);

  CsvWriter series(dir + "/series.csv", {"t_over_T0", "re_a0", "im_a0", "n0",
                                         "sq1_db", "sq2_db", "dn3"});
  evolve_gssf(grid, cfg.nbar, cfg.beta3, state, times, cfg.dt_in_t0 * t0,
              [&](double t, const GaussianState& s) {
                SupermodeProjection p = project_supermode(s, u0);
                const cplx amp = p.amplitude * rotating_frame(cfg.nbar, t);
                GaussianState sub = s;
                sub.basis = GaussianBasis::lsm;
                transform_state(sub, proj);
                sub.dz = 0.0;
                SqueezingSpectrum sq = squeezing_spectrum(sub);
                double dn3 = 0.0;
                if (win.active) {
                  VecR spec = reservoir_spectrum_grid(s, grid, u0);
                  dn3 = dispersive_loss(spec, grid.wavenumbers(), win.k0,
                                        win.delta_k);
                }
                series.row({t / t0, amp.real(), amp.imag(), p.photons,
                            sq.db[0], sq.db.size() > 1 ? sq.db[1] : 0.0,
                            dn3});
                res.final_n0 = p.photons;
                res.delta_n = cfg.nbar - p.photons;
                res.dn3 = dn3;
              });

  res.physicality_margin = symplectic_residual(state) / 4.0;
  if (cfg.outputs.spectrum) {
    VecR spec = reservoir_spectrum_grid(state, grid, u0);
    write_spectrum_csv(dir + "/spectrum.csv", grid.wavenumbers(), cfg.nbar,
                       spec);
  }
}

nlohmann::json config_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["nbar"] = cfg.nbar;
  j["method"] = method_name(cfg.method);
  j["n_lsm"] = cfg.n_lsm;
  j["per_mode_cutoff"] = cfg.per_mode_cutoff;
  j["t_max_in_T0"] = cfg.t_max_in_t0;
  j["dt_in_T0"] = cfg.dt_in_t0;
  j["grid"] = {{"L_scaled", cfg.grid.l_scaled}, {"Nz", cfg.grid.nz}};
  j["beta3"] = cfg.beta3;
  j["toggles"] = {{"v1", cfg.toggles.v1},
                  {"v2", cfg.toggles.v2},
                  {"v_others", cfg.toggles.v_others},
                  {"omega_nbar", cfg.toggles.omega_nbar}};
  j["window"] = {{"k0_auto", cfg.window.k0_auto},
                 {"k0_scaled", cfg.window.k0_scaled},
                 {"delta_k_scaled", cfg.window.delta_k_scaled}};
  j["outputs"] = {{"series", cfg.outputs.series},
                  {"wigner", cfg.outputs.wigner},
                  {"spectrum", cfg.outputs.spectrum},
                  {"histogram", cfg.outputs.histogram}};
  return j;
}

void write_manifest(const ExperimentConfig& cfg, const std::string& dir,
                    const RunResult& res, bool success,
                    const std::string& error) {
  nlohmann::json j;
  j["config"] = config_json(cfg);
  j["version"] = "0.1.0";
  j["success"] = success;
  if (!error.empty()) j["error"] = error;
  j["wall_time_s"] = res.wall_time_s;
  j["diagnostics"] = {{"trace_drift", res.trace_drift},
                      {"physicality_margin", res.physicality_margin},
                      {"cutoff_tail_mass", res.cutoff_tail_mass}};
  std::ofstream out(dir + "/manifest.json");
  out << j.dump(2) << "\n";
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg,
                         const std::string& out_dir) {
  std::vector<ValidationIssue> issues = validate_config(cfg);
  for (const auto& issue : issues) {
    if (issue.severity == ValidationIssue::Severity::error) {
      throw Error(ErrorCode::config_invalid,
                  issue.field + ": " + issue.reason);
    }
  }
  std::filesystem::create_directories(out_dir);

  RunResult res;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (cfg.method) {
      case Method::fock_lsm: run_fock_lsm(cfg, out_dir, res); break;
      case Method::me_full: run_me_full(cfg, out_dir, res); break;
      case Method::me_heff: run_me_heff(cfg, out_dir, res); break;
      case Method::gaussian_lsm: run_gaussian_lsm(cfg, out_dir, res); break;
      case Method::gssf: run_gssf(cfg, out_dir, res); break;
    }
  } catch (const std::exception& e) {
    res.wall_time_s = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    write_manifest(cfg, out_dir, res, false, e.what());
    throw;
  }
  res.wall_time_s = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  write_manifest(cfg, out_dir, res, true, "");
  return res;
}

}  // namespace sq
