#include "experiment.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

namespace sq {

using nlohmann::json;

std::string method_name(Method m) {
  switch (m) {
    case Method::fock_lsm: return "fock-lsm";
    case Method::me_full: return "me-full";
    case Method::me_heff: return "me-heff";
    case Method::gaussian_lsm: return "gaussian-lsm";
    case Method::gssf: return "gssf";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "fock-lsm") return Method::fock_lsm;
  if (name == "me-full") return Method::me_full;
  if (name == "me-heff") return Method::me_heff;
  if (name == "gaussian-lsm") return Method::gaussian_lsm;
  if (name == "gssf") return Method::gssf;
  throw Error(ErrorCode::config_invalid, "unknown method \"" + name + "\"");
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) {
      throw Error(ErrorCode::config_invalid,
                  "unknown key \"" + it.key() + "\" in " + where);
    }
  }
}

double get_number(const json& obj, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    throw Error(ErrorCode::config_invalid, key + " must be a number");
  }
  return v.get<double>();
}

bool get_bool(const json& obj, const std::string& key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_boolean()) {
    throw Error(ErrorCode::config_invalid, key + " must be a boolean");
  }
  return v.get<bool>();
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::config_invalid,
                std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::config_invalid, "config must be a JSON object");
  }
  reject_unknown(j,
                 {"nbar", "method", "n_lsm", "per_mode_cutoff", "t_max_in_T0",
                  "dt_in_T0", "grid", "beta3", "toggles", "window", "outputs"},
                 "config");

  ExperimentConfig cfg;
  if (!j.contains("nbar")) {
    throw Error(ErrorCode::config_invalid, "nbar is required");
  }
  cfg.nbar = get_number(j, "nbar");
  if (!j.contains("method") || !j.at("method").is_string()) {
    throw Error(ErrorCode::config_invalid, "method is required");
  }
  cfg.method = method_from_name(j.at("method").get<std::string>());
  if (!j.contains("t_max_in_T0")) {
    throw Error(ErrorCode::config_invalid, "t_max_in_T0 is required");
  }
  cfg.t_max_in_t0 = get_number(j, "t_max_in_T0");
  if (j.contains("dt_in_T0")) cfg.dt_in_t0 = get_number(j, "dt_in_T0");
  if (j.contains("n_lsm")) {
    cfg.n_lsm = static_cast<int>(get_number(j, "n_lsm"));
    cfg.has_n_lsm = true;
  }
  if (j.contains("per_mode_cutoff")) {
    cfg.per_mode_cutoff = static_cast<int>(get_number(j, "per_mode_cutoff"));
    cfg.has_cutoff = true;
  }
  if (j.contains("beta3")) cfg.beta3 = get_number(j, "beta3");

  if (j.contains("grid")) {
    const json& g = j.at("grid");
    reject_unknown(g, {"L_scaled", "Nz"}, "grid");
    if (g.contains("L_scaled")) cfg.grid.l_scaled = get_number(g, "L_scaled");
    if (g.contains("Nz")) cfg.grid.nz = static_cast<int>(get_number(g, "Nz"));
    cfg.has_grid = true;
  }
  if (j.contains("toggles")) {
    const json& t = j.at("toggles");
    reject_unknown(t, {"v1", "v2", "v_others", "omega_nbar"}, "toggles");
    cfg.toggles.v1 = get_bool(t, "v1", true);
    cfg.toggles.v2 = get_bool(t, "v2", true);
    cfg.toggles.v_others = get_bool(t, "v_others", true);
    cfg.toggles.omega_nbar = get_bool(t, "omega_nbar", true);
  }
  if (j.contains("window")) {
    const json& w = j.at("window");
    reject_unknown(w, {"k0_auto", "k0_scaled", "delta_k_scaled"}, "window");
    cfg.window.k0_auto = get_bool(w, "k0_auto", true);
    if (w.contains("k0_scaled")) {
      cfg.window.k0_scaled = get_number(w, "k0_scaled");
    }
    if (w.contains("delta_k_scaled")) {
      cfg.window.delta_k_scaled = get_number(w, "delta_k_scaled");
    }
  }
  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    reject_unknown(o, {"series", "wigner", "spectrum", "histogram"},
                   "outputs");
    cfg.outputs.series = get_bool(o, "series", true);
    cfg.outputs.wigner = get_bool(o, "wigner", false);
    cfg.outputs.spectrum = get_bool(o, "spectrum", false);
    cfg.outputs.histogram = get_bool(o, "histogram", false);
  }
  return cfg;
}

std::vector<ValidationIssue> validate_config(const ExperimentConfig& cfg) {
  using Sev = ValidationIssue::Severity;
  std::vector<ValidationIssue> issues;
  auto err = [&](const std::string& f, const std::string& r) {
    issues.push_back({Sev::error, f, r});
  };

  if (cfg.nbar <= 0.0) err("nbar", "must be positive");
  if (cfg.t_max_in_t0 < 0.0) err("t_max_in_T0", "must be nonnegative");
  if (cfg.dt_in_t0 <= 0.0) err("dt_in_T0", "must be positive");
  if (cfg.grid.nz < 2 || (cfg.grid.nz & (cfg.grid.nz - 1)) != 0) {
    err("grid.Nz", "must be a power of two");
  }
  if (cfg.grid.l_scaled <= 0.0) err("grid.L_scaled", "must be positive");
  if (cfg.window.delta_k_scaled <= 0.0) {
    err("window.delta_k_scaled", "must be positive");
  }

  switch (cfg.method) {
    case Method::fock_lsm:
      if (!cfg.has_n_lsm) err("n_lsm", "required for method=fock-lsm");
      if (!cfg.has_cutoff) {
        err("per_mode_cutoff", "required for method=fock-lsm");
      }
      if (cfg.n_lsm < 1 || cfg.n_lsm > 10) err("n_lsm", "must be in [1, 10]");
      break;
    case Method::me_full:
      if (!cfg.has_cutoff) {
        err("per_mode_cutoff", "required for method=me-full");
      }
      if (cfg.per_mode_cutoff <= cfg.nbar + 1) {
        err("per_mode_cutoff", "must exceed nbar + 1 for the Lambda matrix");
      }
      break;
    case Method::me_heff:
      break;
    case Method::gaussian_lsm:
      if (!cfg.has_n_lsm) err("n_lsm", "required for method=gaussian-lsm");
      if (cfg.n_lsm < 1) err("n_lsm", "must be >= 1");
      break;
    case Method::gssf:
      if (!cfg.has_grid) err("grid", "required for method=gssf");
      break;
  }
  if (cfg.has_cutoff && cfg.per_mode_cutoff < 1) {
    err("per_mode_cutoff", "must be >= 1");
  }
  if (cfg.has_cutoff && cfg.per_mode_cutoff < cfg.nbar) {
    issues.push_back({Sev::warning, "per_mode_cutoff",
                      "truncation below mean photon number"});
  }
  if (cfg.method == Method::fock_lsm && cfg.n_lsm == 1) {
    issues.push_back({Sev::note, "n_lsm",
                      "evolution reduces to the single-mode H_0"});
  }
  if (cfg.beta3 == 0.0 && cfg.window.k0_auto &&
      (cfg.method == Method::gssf || cfg.method == Method::me_heff)) {
    issues.push_back({Sev::note, "window.k0_auto",
                      "no beta3: dispersive-loss window disabled, dn3 = 0"});
  }
  return issues;
}

std::string describe_methods() {
  std::ostringstream os;
  os << "method        state space           scaling            outputs\n"
     << "fock-lsm      multimode Fock        exp(modes)         series, "
        "wigner, histogram, spectrum\n"
     << "me-full       single-mode density   cutoff^2           series, "
        "wigner, histogram\n"
     << "me-heff       exact diagonal        cutoff             series, "
        "histogram\n"
     << "gaussian-lsm  mean + covariances    n_lsm^4            series, "
        "spectrum\n"
     << "gssf          grid mean + covs      Nz^2 log Nz        series, "
        "spectrum\n";
  return os.str();
}

}  // namespace sq
