#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clifford/harness/config.hpp"

namespace clifford::harness {

struct Report;

struct RunOptions {
  double tolerance_scale = 1.0;
  std::optional<std::uint64_t> seed;
  Execution exec = Execution::parallel;
};

struct ExperimentKind {
  std::string name;
  std::string description;
  bool needs_signature = true;
  std::function<void(const ExperimentConfig&)> validate;
  /// Fills the report; report.pass is decided by the kind.
  std::function<void(const ExperimentConfig&, const RunOptions&, Report&)> run;
};

const std::vector<ExperimentKind>& registry();
const ExperimentKind* find_kind(const std::string& name);

}  // namespace clifford::harness
