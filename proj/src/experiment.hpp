#pragma once

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace sq {

enum class Method { fock_lsm, me_full, me_heff, gaussian_lsm, gssf };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct GridConfig {
  double l_scaled = 80.0;  // L * nbar
  int nz = 2048;
};

struct Toggles {
  bool v1 = true;
  bool v2 = true;
  bool v_others = true;
  bool omega_nbar = true;
};

struct WindowConfig {
  bool k0_auto = true;
  double k0_scaled = 0.0;      // pi k0 / nbar when k0_auto is false
  double delta_k_scaled = 1.0;  // pi delta_k / nbar
};

struct OutputsConfig {
  bool series = true;
  bool wigner = false;
  bool spectrum = false;
  bool histogram = false;
};

struct ExperimentConfig {
  double nbar = 0.0;
  Method method = Method::fock_lsm;
  int n_lsm = 3;
  int per_mode_cutoff = 16;
  double t_max_in_t0 = 1.0;
  double dt_in_t0 = 1.0 / 2000.0;
  GridConfig grid;
  double beta3 = 0.0;
  Toggles toggles;
  WindowConfig window;
  OutputsConfig outputs;

  bool has_grid = false;  // whether the config file provided a grid block
  bool has_n_lsm = false;
  bool has_cutoff = false;
};

// Parse a JSON config text; unknown keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);

struct ValidationIssue {
  enum class Severity { error, warning, note };
  Severity severity;
  std::string field;
  std::string reason;
};

// Static checks only; never computes.
std::vector<ValidationIssue> validate_config(const ExperimentConfig& cfg);

struct RunResult {
  double final_n0 = 0.0;
  double delta_n = 0.0;   // nbar - final_n0
  double dn3 = 0.0;       // dispersive-loss window integral at t_max
  double trace_drift = 0.0;
  double physicality_margin = 0.0;  // max |nu - 1/2| proxy over checks
  double cutoff_tail_mass = 0.0;
  double wall_time_s = 0.0;
};

// Execute one experiment, writing CSV outputs plus manifest.json in out_dir.
RunResult run_experiment(const ExperimentConfig& cfg,
                         const std::string& out_dir);

struct SweepRow {
  double axis_value;
  RunResult result;
};

// Independent runs over axis values; per-point outputs under
// out_dir/point_<index>, summary.csv assembled in input order.
std::vector<SweepRow> run_sweep(const ExperimentConfig& base,
                                const std::string& axis,
                                const std::vector<double>& values, int jobs,
                                const std::string& out_dir);

std::string describe_methods();

}  // namespace sq
