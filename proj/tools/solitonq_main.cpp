#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "solitonq.h"

namespace {

int status_to_exit(sq_status st) {
  if (st == SQ_OK) return 0;
  if (st == SQ_ERR_INVALID_CONFIG) return 2;
  return 3;
}

int fail(sq_status st) {
  std::fprintf(stderr, "error: %s\n", sq_last_error());
  return status_to_exit(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string resolve_out_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SOLITONQ_OUT_DIR")) return env;
  return ".";
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size()) {
      std::fprintf(stderr, "error: bad value \"%s\" in --values\n",
                   item.c_str());
      std::exit(2);
    }
    values.push_back(v);
  }
  return values;
}

struct ExperimentHolder {
  sq_experiment* handle = nullptr;
  ~ExperimentHolder() { sq_experiment_destroy(handle); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solitonq: quantum soliton dynamics experiment runner"};
  app.require_subcommand(1);

  std::string config_path, out_flag, axis, values_csv;
  int jobs = 1;

  CLI::App* run = app.add_subcommand("run", "Run one experiment");
  run->add_option("--config", config_path, "JSON config file")->required();
  run->add_option("--out", out_flag, "Output directory");

  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--config", config_path, "JSON base config file")
      ->required();
  sweep->add_option("--out", out_flag, "Output directory");
  sweep->add_option("--axis", axis, "Config field to sweep")->required();
  sweep->add_option("--values", values_csv, "Comma-separated axis values")
      ->required();
  sweep->add_option("--jobs", jobs, "Concurrent sweep workers");

  CLI::App* validate = app.add_subcommand("validate", "Check a config file");
  validate->add_option("--config", config_path, "JSON config file")
      ->required();

  app.add_subcommand("describe-methods", "List available methods");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("describe-methods")) {
    char* text = nullptr;
    sq_status st = sq_describe_methods(&text);
    if (st != SQ_OK) return fail(st);
    std::fputs(text, stdout);
    sq_string_free(text);
    return 0;
  }

  const std::string config_json = read_file(config_path);
  ExperimentHolder exp;
  sq_status st = sq_experiment_create(config_json.c_str(), &exp.handle);
  if (st != SQ_OK) return fail(st);

  if (app.got_subcommand("validate")) {
    char* report = nullptr;
    st = sq_experiment_validate(exp.handle, &report);
    if (report) {
      std::fputs(report, stdout);
      sq_string_free(report);
    }
    if (st == SQ_OK) std::printf("ok\n");
    return status_to_exit(st);
  }

  const std::string out_dir = resolve_out_dir(out_flag);
  if (app.got_subcommand("run")) {
    sq_run_result result;
    st = sq_experiment_run(exp.handle, out_dir.c_str(), &result);
    if (st != SQ_OK) return fail(st);
    std::printf("final_n0 %.17g\ndelta_n %.17g\ndn3 %.17g\nwall_time_s %g\n",
                result.final_n0, result.delta_n, result.dn3,
                result.wall_time_s);
    return 0;
  }

  std::vector<double> values = parse_values(values_csv);
  st = sq_sweep_run(exp.handle, axis.c_str(), values.data(),
                    static_cast<int>(values.size()), jobs, out_dir.c_str(),
                    nullptr);
  if (st != SQ_OK) return fail(st);
  std::printf("sweep complete: %zu points -> %s/summary.csv\n", values.size(),
              out_dir.c_str());
  return 0;
}
