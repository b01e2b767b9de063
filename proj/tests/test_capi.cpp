#include <doctest.h>

#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "solitonq.h"

namespace {

const char* kTinyConfig =
    "{\"nbar\": 2, \"method\": \"me-heff\", \"t_max_in_T0\": 0.1}";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("create, validate, run, destroy") {
  sq_experiment* exp = nullptr;
  REQUIRE(sq_experiment_create(kTinyConfig, &exp) == SQ_OK);

  char* report = nullptr;
  CHECK(sq_experiment_validate(exp, &report) == SQ_OK);
  CHECK(std::string(report).find("error") == std::string::npos);
  sq_string_free(report);

  sq_run_result result;
  REQUIRE(sq_experiment_run(exp, "capi_out/run1", &result) == SQ_OK);
  CHECK(result.final_n0 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(result.delta_n == doctest::Approx(0.0));
  CHECK(result.wall_time_s > 0.0);
  sq_experiment_destroy(exp);

  std::string series = slurp("capi_out/run1/series.csv");
  CHECK(series.rfind("t,t_over_T0,re_a0,im_a0,n0,purity0", 0) == 0);
}

TEST_CASE("determinism: identical runs give byte-identical data files") {
  sq_experiment* exp = nullptr;
  REQUIRE(sq_experiment_create(kTinyConfig, &exp) == SQ_OK);
  REQUIRE(sq_experiment_run(exp, "capi_out/det_a", nullptr) == SQ_OK);
  REQUIRE(sq_experiment_run(exp, "capi_out/det_b", nullptr) == SQ_OK);
  sq_experiment_destroy(exp);
  CHECK(slurp("capi_out/det_a/series.csv") ==
        slurp("capi_out/det_b/series.csv"));
}

TEST_CASE("invalid configurations are rejected with code 2") {
  sq_experiment* exp = nullptr;
  CHECK(sq_experiment_create("{\"nbar\": 5,", &exp) == SQ_ERR_INVALID_CONFIG);
  CHECK(std::strlen(sq_last_error()) > 0);
  CHECK(sq_experiment_create(
            "{\"nbar\": 5, \"method\": \"me-heff\", \"t_max_in_T0\": 1, "
            "\"bogus\": 1}",
            &exp) == SQ_ERR_INVALID_CONFIG);
  CHECK(std::string(sq_last_error()).find("bogus") != std::string::npos);

  // Missing grid for gssf is caught by validation, naming the field.
  REQUIRE(sq_experiment_create(
              "{\"nbar\": 5, \"method\": \"gssf\", \"t_max_in_T0\": 1}",
              &exp) == SQ_OK);
  char* report = nullptr;
  CHECK(sq_experiment_validate(exp, &report) == SQ_ERR_INVALID_CONFIG);
  CHECK(std::string(report).find("grid") != std::string::npos);
  sq_string_free(report);
  sq_experiment_destroy(exp);

  // Warning only: cutoff below nbar still validates.
  REQUIRE(sq_experiment_create(
              "{\"nbar\": 30, \"method\": \"me-full\", \"t_max_in_T0\": 1, "
              "\"per_mode_cutoff\": 40}",
              &exp) == SQ_OK);
  CHECK(sq_experiment_validate(exp, &report) == SQ_OK);
  sq_string_free(report);
  sq_experiment_destroy(exp);
}

TEST_CASE("sweep over an axis writes summary rows in input order") {
  sq_experiment* base = nullptr;
  REQUIRE(sq_experiment_create(kTinyConfig, &base) == SQ_OK);
  double values[3] = {2.0, 3.0, 4.0};
  sq_run_result results[3];
  REQUIRE(sq_sweep_run(base, "nbar", values, 3, 2, "capi_out/sweep",
                       results) == SQ_OK);
  for (int i = 0; i < 3; ++i) {
    CHECK(results[i].final_n0 == doctest::Approx(values[i]).epsilon(1e-12));
  }
  std::string summary = slurp("capi_out/sweep/summary.csv");
  CHECK(summary.find("nbar,final_n0,delta_n,dn3") != std::string::npos);

  // Parallelism does not change the data files.
  REQUIRE(sq_sweep_run(base, "nbar", values, 3, 1, "capi_out/sweep1",
                       nullptr) == SQ_OK);
  CHECK(slurp("capi_out/sweep/summary.csv") ==
        slurp("capi_out/sweep1/summary.csv"));

  // Empty value list: header-only summary, no failure.
  REQUIRE(sq_sweep_run(base, "nbar", nullptr, 0, 1, "capi_out/sweep0",
                       nullptr) == SQ_OK);
  CHECK(slurp("capi_out/sweep0/summary.csv") == "nbar,final_n0,delta_n,dn3\n");

  CHECK(sq_sweep_run(base, "not_an_axis", values, 3, 1, "capi_out/sweepx",
                     nullptr) == SQ_ERR_INVALID_CONFIG);
  sq_experiment_destroy(base);
}

TEST_CASE("scalar helpers") {
  double t0 = 0.0;
  REQUIRE(sq_soliton_period(5.0, &t0) == SQ_OK);
  CHECK(t0 == doctest::Approx(2.0 * 3.14159265358979324 / 25.0));

  double x0 = 0.0;
  REQUIRE(sq_tod_phase_matching(0.1, &x0) == SQ_OK);
  CHECK(x0 == doctest::Approx(10.2356).epsilon(1e-3));
  CHECK(sq_tod_phase_matching(0.0, &x0) == SQ_ERR_INVALID_CONFIG);

  double rates[6];
  REQUIRE(sq_tod_rates(0.2, rates) == SQ_OK);
  CHECK(rates[1] == doctest::Approx(3.613e-3).epsilon(1e-3));
  CHECK(rates[4] == doctest::Approx(-3.835e-3).epsilon(1e-3));
  CHECK(rates[0] == 0.0);

  double beta3 = 0.0;
  REQUIRE(sq_physical_beta3(1e-15, 2e8, -2e-26, 1e-40, &beta3) == SQ_OK);
  CHECK(beta3 == doctest::Approx(1.8293).epsilon(1e-3));

  double period = 0.0;
  REQUIRE(sq_physical_period(100e-15, 2e8, -2e-26, &period) == SQ_OK);
  CHECK(period == doctest::Approx(1.275e-9).epsilon(1e-6));

  char* text = nullptr;
  REQUIRE(sq_describe_methods(&text) == SQ_OK);
  CHECK(std::string(text).find("gssf") != std::string::npos);
  sq_string_free(text);
}
