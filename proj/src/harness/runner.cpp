#include "clifford/harness/runner.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <sstream>

namespace clifford::harness {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  Report r;
  r.experiment = cfg.name;
  r.kind = cfg.kind;
  r.seed = opts.seed.value_or(cfg.seed);
  r.config = cfg.source;
  r.tolerance = cfg.tolerance * opts.tolerance_scale;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    const ExperimentKind* kind = find_kind(cfg.kind);
    if (!kind) throw ConfigError("field 'kind': unknown experiment kind '" + cfg.kind + "'");
    kind->run(cfg, opts, r);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    r.pass = false;
    r.message = cfg.kind + " '" + cfg.name + "': " + e.what();
  }
  r.wall_time = seconds_since(t0);
  if (cfg.time_limit && r.wall_time > *cfg.time_limit) {
    r.pass = false;
    std::ostringstream m;
    m << "exceeded time limit of " << *cfg.time_limit << " s";
    r.message = r.message.empty() ? m.str() : r.message + "; " + m.str();
  }
  return r;
}

bool SuiteSummary::all_pass() const {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

SuiteSummary run_suite(const Json& suite, const SuiteOptions& opts) {
  if (!suite.is_object()) throw ConfigError("suite: expected a JSON object");
  for (const auto& [key, _] : suite.items())
    if (key != "name" && key != "description" && key != "experiments")
      throw ConfigError("suite: unknown key '" + key + "'");
  if (!suite.contains("experiments") || !suite["experiments"].is_array())
    throw ConfigError("field 'experiments': expected an array");

  SuiteSummary s;
  s.name = suite.value("name", std::string("suite"));

  // Parse everything up front so a bad entry fails before any work starts.
  std::vector<ExperimentConfig> configs;
  for (std::size_t i = 0; i < suite["experiments"].size(); ++i) {
    try {
      configs.push_back(parse_experiment(suite["experiments"][i]));
    } catch (const ConfigError& e) {
      throw ConfigError("experiments[" + std::to_string(i) + "]: " + e.what());
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  s.reports.resize(configs.size());
  if (opts.parallel_experiments) {
    RunOptions inner = opts.run;
    inner.exec = Execution::serial;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < configs.size(); ++i) s.reports[i] = run_experiment(configs[i], inner);
  } else {
    for (std::size_t i = 0; i < configs.size(); ++i) s.reports[i] = run_experiment(configs[i], opts.run);
  }
  s.wall_time = seconds_since(t0);

  if (opts.out_dir) write_suite_outputs(s, *opts.out_dir);
  return s;
}

SuiteSummary run_suite_file(const std::string& path, const SuiteOptions& opts) {
  return run_suite(read_json_file(path), opts);
}

std::string summary_table(const SuiteSummary& s) {
  std::size_t name_w = 10, kind_w = 4;
  for (const auto& r : s.reports) {
    name_w = std::max(name_w, r.experiment.size());
    kind_w = std::max(kind_w, r.kind.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_w)) << "experiment" << "  " << std::setw(static_cast<int>(kind_w))
      << "kind" << "  " << std::right << std::setw(11) << "deviation" << "  " << std::setw(10) << "tolerance" << "  "
      << std::setw(9) << "time[s]" << "  result\n";
  for (const auto& r : s.reports) {
    out << std::left << std::setw(static_cast<int>(name_w)) << r.experiment << "  "
        << std::setw(static_cast<int>(kind_w)) << r.kind << "  " << std::right << std::scientific
        << std::setprecision(3) << std::setw(11) << r.deviation << "  " << std::setw(10) << r.tolerance << "  "
        << std::fixed << std::setprecision(2) << std::setw(9) << r.wall_time << "  " << (r.pass ? "PASS" : "FAIL");
    if (!r.message.empty()) out << "  (" << r.message << ")";
    out << '\n';
  }
  std::size_t passed = 0;
  for (const auto& r : s.reports) passed += r.pass;
  out << std::fixed << std::setprecision(2) << passed << "/" << s.reports.size() << " passed in " << s.wall_time
      << " s\n";
  return out.str();
}

void write_suite_outputs(const SuiteSummary& s, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  Json summary = Json::object();
  summary["suite"] = s.name;
  summary["wall_time"] = s.wall_time;
  summary["all_pass"] = s.all_pass();
  summary["experiments"] = Json::array();
  std::ostringstream csv;
  csv << "experiment,kind,deviation,tolerance,error_estimate,wall_time,pass,message\n";
  for (const auto& r : s.reports) {
    write_report(r, dir);
    summary["experiments"].push_back({{"experiment", r.experiment},
                                      {"kind", r.kind},
                                      {"deviation", r.deviation},
                                      {"tolerance", r.tolerance},
                                      {"wall_time", r.wall_time},
                                      {"pass", r.pass},
                                      {"message", r.message}});
    std::string msg = r.message;
    for (char& c : msg)
      if (c == '"') c = '\'';
    csv << r.experiment << ',' << r.kind << ',' << std::setprecision(17) << r.deviation << ',' << r.tolerance << ','
        << r.error_estimate << ',' << r.wall_time << ',' << (r.pass ? "true" : "false") << ",\"" << msg << "\"\n";
  }
  write_atomic(dir / "summary.json", summary.dump(2) + "\n");
  write_atomic(dir / "summary.csv", csv.str());
}

std::filesystem::path default_output_dir() {
  if (const char* env = std::getenv("VERIFY_OUT_DIR"); env && *env) return env;
  return "verify-out";
}

}  // namespace clifford::harness
