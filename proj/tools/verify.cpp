#include <omp.h>

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "clifford/harness/runner.hpp"

using namespace clifford;
using namespace clifford::harness;

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of indefinite-signature Clifford analysis"};
  app.require_subcommand(1);

  int threads = 0;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  double tolerance_scale = 1.0;
  bool parallel_experiments = false;
  bool serial = false;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "OpenMP worker threads (default: runtime choice)")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_dir, "output directory (default: $VERIFY_OUT_DIR or ./verify-out)");
    cmd->add_option("--seed", seed, "override every experiment's seed");
    cmd->add_option("--tolerance-scale", tolerance_scale, "multiply every tolerance")->check(CLI::PositiveNumber);
    cmd->add_flag("--serial", serial, "use the serial reference quadrature");
  };

  std::string config_path, suite_path;
  auto* run = app.add_subcommand("run", "run one experiment config");
  run->add_option("config", config_path, "experiment JSON")->required()->check(CLI::ExistingFile);
  common(run);

  auto* suite = app.add_subcommand("suite", "run every experiment of a suite");
  suite->add_option("suite", suite_path, "suite JSON")->required()->check(CLI::ExistingFile);
  suite->add_flag("--parallel-experiments", parallel_experiments, "run experiments concurrently");
  common(suite);

  auto* list = app.add_subcommand("list", "print the experiment registry");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    for (const auto& k : registry()) std::printf("%-20s %s\n", k.name.c_str(), k.description.c_str());
    return 0;
  }

  if (threads > 0) omp_set_num_threads(threads);
  SuiteOptions opts;
  opts.run.tolerance_scale = tolerance_scale;
  opts.run.seed = seed;
  opts.run.exec = serial ? Execution::serial : Execution::parallel;
  opts.out_dir = out_dir.empty() ? default_output_dir() : std::filesystem::path(out_dir);
  opts.parallel_experiments = parallel_experiments;

  try {
    SuiteSummary summary;
    if (run->parsed()) {
      Json suite_json = {{"name", "run"}, {"experiments", Json::array({read_json_file(config_path)})}};
      summary = run_suite(suite_json, opts);
    } else {
      summary = run_suite_file(suite_path, opts);
    }
    std::cout << summary_table(summary);
    std::cout << "reports written to " << opts.out_dir->string() << "\n";
    return summary.all_pass() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
