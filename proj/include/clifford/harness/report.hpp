#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "clifford/harness/config.hpp"

namespace clifford::harness {

/// One line of the flat CSV: a per-eps sample, a limit, or a per-signature
/// summary for property experiments.
struct CsvRow {
  Signature sig{1, 0};
  std::string eps;
  std::optional<Multivector> value;
  double error_estimate = 0.0;
  std::string expected;
  bool pass = false;
};

/// Where an expected value comes from: a theorem statement, or a closed
/// form / exact evaluation derived here.
enum class Provenance { theorem, derived, exact };
std::string to_string(Provenance p);

struct Report {
  std::string experiment;
  std::string kind;
  std::uint64_t seed = 0;
  Json config;

  std::vector<double> eps;
  std::vector<Multivector> series;
  std::vector<Multivector> extrapolants;
  std::optional<Multivector> limit;
  std::optional<Multivector> expected;
  Provenance provenance = Provenance::derived;
  std::string expected_note;

  double error_estimate = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time = 0.0;
  std::size_t nodes = 0;
  Json metrics = Json::object();
  std::string message;

  std::vector<CsvRow> rows;
};

Json multivector_json(const Multivector& m);
Json to_json(const Report& r);

/// CSV with columns experiment, p, q, eps, re_<blade>, im_<blade> (every
/// blade of the first row's signature, named in the values' space),
/// error_estimate, expected, pass.
std::string to_csv(const Report& r);
std::string csv_header(const Signature& sig, Space space = Space::real_pq);

/// Writes via a temporary file and rename, so readers never see partial output.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// <dir>/<experiment>.json and <dir>/<experiment>.csv.
void write_report(const Report& r, const std::filesystem::path& dir);

}  // namespace clifford::harness
