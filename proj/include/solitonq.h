#ifndef SOLITONQ_H
#define SOLITONQ_H

/* C interface to the solitonq quantum soliton dynamics library.
 *
 * All functions return a status code; SQ_OK means success.  On failure,
 * sq_last_error() returns a thread-local description of the most recent
 * error.  Strings returned through out-parameters are heap-allocated and
 * must be released with sq_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sq_status {
  SQ_OK = 0,
  SQ_ERR_INVALID_CONFIG = 2,
  SQ_ERR_NUMERICAL = 3,
  SQ_ERR_RUNTIME = 4,
} sq_status;

/* Opaque experiment handle holding a parsed configuration. */
typedef struct sq_experiment sq_experiment;

/* Description of the most recent failure on this thread ("" if none). */
const char* sq_last_error(void);

/* Releases a string allocated by this library.  NULL is ignored. */
void sq_string_free(char* s);

/* Parses a JSON configuration text into a new experiment handle.
 * Unknown keys anywhere in the document are rejected. */
sq_status sq_experiment_create(const char* config_json, sq_experiment** out);

void sq_experiment_destroy(sq_experiment* exp);

/* Static validation.  Returns SQ_ERR_INVALID_CONFIG when errors are
 * present; *report receives a human-readable listing of all errors,
 * warnings, and notes (may be empty). */
sq_status sq_experiment_validate(const sq_experiment* exp, char** report);

/* Summary scalars produced by a run. */
typedef struct sq_run_result {
  double final_n0;           /* soliton-mode photon number at t_max */
  double delta_n;            /* nbar - final_n0 */
  double dn3;                /* dispersive-loss window integral */
  double trace_drift;        /* max |tr rho - 1| over the run (ME methods) */
  double physicality_margin; /* worst symplectic / positivity violation */
  double cutoff_tail_mass;   /* initial Poisson mass beyond the cutoff */
  double wall_time_s;
} sq_run_result;

/* Runs the experiment, writing CSV outputs and manifest.json under
 * out_dir (created if absent). */
sq_status sq_experiment_run(const sq_experiment* exp, const char* out_dir,
                            sq_run_result* result);

/* Runs one experiment per axis value (axis names a scalar config field:
 * nbar, beta3, n_lsm, per_mode_cutoff, t_max_in_T0, dt_in_T0), with up to
 * `jobs` concurrent workers.  Per-point outputs land in
 * out_dir/point_<index>; summary.csv is written in input order.  When
 * `results` is non-NULL it must hold n_values entries. */
sq_status sq_sweep_run(const sq_experiment* base, const char* axis,
                       const double* values, int n_values, int jobs,
                       const char* out_dir, sq_run_result* results);

/* Capability table for the available methods. */
sq_status sq_describe_methods(char** text);

/* Scalar helpers. */

/* T0 = 2 pi / nbar^2. */
sq_status sq_soliton_period(double nbar, double* t0);

/* Real root of x^2 - beta3 x^3 + pi^2/4 = 0 (Cherenkov phase matching). */
sq_status sq_tod_phase_matching(double beta3, double* x0);

/* Leading-order third-order-dispersion rates.  rates[0..5] =
 * {gamma_l, gamma_nl, gamma_sol, omega_l, omega_nl, omega_sol}. */
sq_status sq_tod_rates(double beta3, double rates[6]);

/* Scaled beta3 from dimensionful waveguide parameters:
 * t_fwhm [s], v_g [m/s], k2 [s^2/m] (signed), k3 [s^3/m]. */
sq_status sq_physical_beta3(double t_fwhm, double v_g, double k2, double k3,
                            double* beta3);

/* Soliton period in physical time [s] for the same parameters. */
sq_status sq_physical_period(double t_fwhm, double v_g, double k2,
                             double* t0_seconds);

#ifdef __cplusplus
}
#endif

#endif /* SOLITONQ_H */
