#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "clifford/harness/registry.hpp"
#include "clifford/harness/report.hpp"

namespace clifford::harness {

/// Runs one experiment. Numeric failures are caught and turned into a
/// failing report whose message names the experiment.
Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

struct SuiteOptions {
  RunOptions run;
  std::optional<std::filesystem::path> out_dir;
  bool parallel_experiments = false;
};

struct SuiteSummary {
  std::string name;
  std::vector<Report> reports;
  double wall_time = 0.0;
  bool all_pass() const;
};

/// Suite file: {"name": ..., "experiments": [ {...}, ... ]}.
SuiteSummary run_suite(const Json& suite, const SuiteOptions& opts = {});
SuiteSummary run_suite_file(const std::string& path, const SuiteOptions& opts = {});

/// Fixed-width table, one line per experiment.
std::string summary_table(const SuiteSummary& s);

/// summary.csv / summary.json plus each experiment's report.
void write_suite_outputs(const SuiteSummary& s, const std::filesystem::path& dir);

/// VERIFY_OUT_DIR, or "verify-out" when unset.
std::filesystem::path default_output_dir();

}  // namespace clifford::harness
