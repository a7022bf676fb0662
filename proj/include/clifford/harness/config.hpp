#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "clifford/fields/dirac.hpp"
#include "clifford/quadrature/extrapolation.hpp"
#include "clifford/quadrature/integrate.hpp"

namespace clifford::harness {

using Json = nlohmann::ordered_json;

struct BoundarySpec {
  std::string type = "sphere";
  std::vector<double> center;   // empty = origin
  double radius = 1.0;
  std::vector<double> extents;  // box half-widths / ellipsoid semi-axes

  Boundary build(const Signature& sig) const;
};

/// One experiment. Which fields matter depends on `kind`; see the README
/// for the schema. Unknown keys are rejected.
struct ExperimentConfig {
  std::string name;
  std::string kind;
  std::vector<Signature> signatures;  // "signature" (single) or "signatures" (list)
  std::string field = "constant";
  std::string g_field = "constant";
  BoundarySpec boundary;
  std::vector<double> x0;  // empty = origin
  GridSpec grid;
  EpsSchedule eps;
  std::vector<double> eps_values{0.05, 0.1};
  Side side = Side::left;
  double tolerance = 1e-2;
  std::uint64_t seed = 1;
  int samples = 100;
  int max_n = 5;
  int degree = 3;
  int volume_nodes = 32;
  std::optional<double> fd_step;
  std::optional<double> time_limit;  // seconds; exceeding it fails the run

  Json source;  // the parsed object, echoed into reports

  const Signature& signature() const;
  Paravector x0_point(const Signature& sig) const;
};

/// Parses and validates one experiment object; errors name the offending field.
ExperimentConfig parse_experiment(const Json& j);

/// Reads a JSON file, reporting parse errors with line and column.
Json read_json_file(const std::string& path);

}  // namespace clifford::harness
