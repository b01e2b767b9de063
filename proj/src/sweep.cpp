#include <atomic>
#include <filesystem>
#include <thread>

#include "csv.hpp"
#include "experiment.hpp"

namespace sq {

namespace {

ExperimentConfig with_axis(const ExperimentConfig& base,
                           const std::string& axis, double value) {
  ExperimentConfig cfg = base;
  if (axis == "nbar") {
    cfg.nbar = value;
  } else if (axis == "beta3") {
    cfg.beta3 = value;
  } else if (axis == "n_lsm") {
    cfg.n_lsm = static_cast<int>(value);
    cfg.has_n_lsm = true;
  } else if (axis == "per_mode_cutoff") {
    cfg.per_mode_cutoff = static_cast<int>(value);
    cfg.has_cutoff = true;
  } else if (axis == "t_max_in_T0") {
    cfg.t_max_in_t0 = value;
  } else if (axis == "dt_in_T0") {
    cfg.dt_in_t0 = value;
  } else {
    throw Error(ErrorCode::config_invalid, "unknown sweep axis \"" + axis +
                                               "\"");
  }
  return cfg;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ExperimentConfig& base,
                                const std::string& axis,
                                const std::vector<double>& values, int jobs,
                                const std::string& out_dir) {
  require(jobs >= 1, ErrorCode::invalid_argument, "jobs must be >= 1");
  with_axis(base, axis, values.empty() ? 0.0 : values.front());  // axis check
  std::filesystem::create_directories(out_dir);
  const int count = static_cast<int>(values.size());
  std::vector<SweepRow> rows(count);
  std::vector<std::string> errors(count);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      rows[i].axis_value = values[i];
      try {
        ExperimentConfig cfg = with_axis(base, axis, values[i]);
        rows[i].result = run_experiment(
            cfg, out_dir + "/point_" + std::to_string(i));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (jobs == 1 || count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min(jobs, count); ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (int i = 0; i < count; ++i) {
    if (!errors[i].empty()) {
      throw Error(ErrorCode::tolerance_breach,
                  "sweep point " + std::to_string(i) + " (" + axis + " = " +
                      format_g17(values[i]) + ") failed: " + errors[i]);
    }
  }

  CsvWriter summary(out_dir + "/summary.csv",
                    {axis, "final_n0", "delta_n", "dn3"});
  for (const SweepRow& r : rows) {
    summary.row({r.axis_value, r.result.final_n0, r.result.delta_n,
                 r.result.dn3});
  }
  return rows;
}

}  // namespace sq
