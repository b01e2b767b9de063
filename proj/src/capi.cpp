#include "solitonq.h"

#include <cstring>
#include <sstream>
#include <string>

#include "experiment.hpp"
#include "me.hpp"
#include "soliton.hpp"
#include "units.hpp"

namespace {

thread_local std::string g_last_error;

sq_status code_to_status(sq::ErrorCode code) {
  switch (code) {
    case sq::ErrorCode::config_invalid:
    case sq::ErrorCode::invalid_argument:
      return SQ_ERR_INVALID_CONFIG;
    case sq::ErrorCode::io_failure:
      return SQ_ERR_RUNTIME;
    default:
      return SQ_ERR_NUMERICAL;
  }
}

template <typename Fn>
sq_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SQ_OK;
  } catch (const sq::Error& e) {
    g_last_error = e.what();
    return code_to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SQ_ERR_RUNTIME;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill_result(const sq::RunResult& r, sq_run_result* out) {
  if (!out) return;
  out->final_n0 = r.final_n0;
  out->delta_n = r.delta_n;
  out->dn3 = r.dn3;
  out->trace_drift = r.trace_drift;
  out->physicality_margin = r.physicality_margin;
  out->cutoff_tail_mass = r.cutoff_tail_mass;
  out->wall_time_s = r.wall_time_s;
}

const char* severity_name(sq::ValidationIssue::Severity s) {
  switch (s) {
    case sq::ValidationIssue::Severity::error: return "error";
    case sq::ValidationIssue::Severity::warning: return "warning";
    case sq::ValidationIssue::Severity::note: return "note";
  }
  return "?";
}

}  // namespace

struct sq_experiment {
  sq::ExperimentConfig config;
};

extern "C" {

const char* sq_last_error(void) { return g_last_error.c_str(); }

void sq_string_free(char* s) { delete[] s; }

sq_status sq_experiment_create(const char* config_json, sq_experiment** out) {
  return guarded([&] {
    sq::require(config_json && out, sq::ErrorCode::invalid_argument,
                "config_json and out must be non-NULL");
    *out = new sq_experiment{sq::parse_config(config_json)};
  });
}

void sq_experiment_destroy(sq_experiment* exp) { delete exp; }

sq_status sq_experiment_validate(const sq_experiment* exp, char** report) {
  bool has_error = false;
  sq_status st = guarded([&] {
    sq::require(exp != nullptr, sq::ErrorCode::invalid_argument,
                "exp must be non-NULL");
    std::vector<sq::ValidationIssue> issues =
        sq::validate_config(exp->config);
    std::ostringstream os;
    for (const sq::ValidationIssue& issue : issues) {
      os << severity_name(issue.severity) << ": " << issue.field << ": "
         << issue.reason << "\n";
      if (issue.severity == sq::ValidationIssue::Severity::error) {
        has_error = true;
      }
    }
    if (report) *report = dup_string(os.str());
  });
  if (st != SQ_OK) return st;
  if (has_error) {
    g_last_error = "configuration failed validation";
    return SQ_ERR_INVALID_CONFIG;
  }
  return SQ_OK;
}

sq_status sq_experiment_run(const sq_experiment* exp, const char* out_dir,
                            sq_run_result* result) {
  return guarded([&] {
    sq::require(exp && out_dir, sq::ErrorCode::invalid_argument,
                "exp and out_dir must be non-NULL");
    fill_result(sq::run_experiment(exp->config, out_dir), result);
  });
}

sq_status sq_sweep_run(const sq_experiment* base, const char* axis,
                       const double* values, int n_values, int jobs,
                       const char* out_dir, sq_run_result* results) {
  return guarded([&] {
    sq::require(base && axis && out_dir, sq::ErrorCode::invalid_argument,
                "base, axis and out_dir must be non-NULL");
    sq::require(n_values == 0 || values != nullptr,
                sq::ErrorCode::invalid_argument,
                "values must be non-NULL when n_values > 0");
    std::vector<double> vals(values, values + n_values);
    std::vector<sq::SweepRow> rows =
        sq::run_sweep(base->config, axis, vals, jobs, out_dir);
    if (results) {
      for (int i = 0; i < n_values; ++i) fill_result(rows[i].result,
                                                     &results[i]);
    }
  });
}

sq_status sq_describe_methods(char** text) {
  return guarded([&] {
    sq::require(text != nullptr, sq::ErrorCode::invalid_argument,
                "text must be non-NULL");
    *text = dup_string(sq::describe_methods());
  });
}

sq_status sq_soliton_period(double nbar, double* t0) {
  return guarded([&] {
    sq::require(t0 != nullptr, sq::ErrorCode::invalid_argument,
                "t0 must be non-NULL");
    *t0 = sq::soliton_period(nbar);
  });
}

sq_status sq_tod_phase_matching(double beta3, double* x0) {
  return guarded([&] {
    sq::require(x0 != nullptr, sq::ErrorCode::invalid_argument,
                "x0 must be non-NULL");
    *x0 = sq::tod_phase_matching(beta3);
  });
}

sq_status sq_tod_rates(double beta3, double rates[6]) {
  return guarded([&] {
    sq::require(rates != nullptr, sq::ErrorCode::invalid_argument,
                "rates must be non-NULL");
    sq::TODRates r = sq::tod_rates(beta3);
    rates[0] = r.gamma_l;
    rates[1] = r.gamma_nl;
    rates[2] = r.gamma_sol;
    rates[3] = r.omega_l;
    rates[4] = r.omega_nl;
    rates[5] = r.omega_sol;
  });
}

sq_status sq_physical_beta3(double t_fwhm, double v_g, double k2, double k3,
                            double* beta3) {
  return guarded([&] {
    sq::require(beta3 != nullptr, sq::ErrorCode::invalid_argument,
                "beta3 must be non-NULL");
    *beta3 = sq::physical_beta3({t_fwhm, v_g, k2, k3});
  });
}

sq_status sq_physical_period(double t_fwhm, double v_g, double k2,
                             double* t0_seconds) {
  return guarded([&] {
    sq::require(t0_seconds != nullptr, sq::ErrorCode::invalid_argument,
                "t0_seconds must be non-NULL");
    *t0_seconds = sq::physical_period({t_fwhm, v_g, k2, 0.0});
  });
}

}  // extern "C"
