#include "clifford/harness/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "clifford/harness/registry.hpp"

namespace clifford::harness {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("field '" + field + "': " + what);
}

template <class T>
T get(const Json& j, const std::string& key, const std::string& path) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(path + key, e.what());
  }
}

Signature parse_signature(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    fail(path, "expected [p, q]");
  try {
    return {j[0].get<int>(), j[1].get<int>()};
  } catch (const InvalidSignature& e) {
    fail(path, e.what());
  }
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(path + it.key(), "unknown key");
}

GridSpec parse_grid(const Json& j) {
  check_keys(j, {"outer_nodes", "inner_order", "inner_panels", "band", "depth", "spacing"}, "grid.");
  GridSpec g;
  if (j.contains("outer_nodes")) {
    const auto& o = j["outer_nodes"];
    g.outer_nodes = o.is_array() ? o.get<std::vector<int>>() : std::vector<int>{o.get<int>()};
  }
  if (j.contains("inner_order")) g.inner_order = get<int>(j, "inner_order", "grid.");
  if (j.contains("inner_panels")) g.inner_panels = get<int>(j, "inner_panels", "grid.");
  if (j.contains("band")) g.band = get<double>(j, "band", "grid.");
  if (j.contains("depth")) g.depth = get<int>(j, "depth", "grid.");
  if (j.contains("spacing")) g.spacing = get<double>(j, "spacing", "grid.");
  try {
    g.validate();
  } catch (const ConfigError& e) {
    fail("grid", e.what());
  }
  return g;
}

EpsSchedule parse_eps(const Json& j) {
  check_keys(j, {"eps0", "ratio", "steps", "sign", "tolerance"}, "eps.");
  EpsSchedule s;
  if (j.contains("eps0")) s.eps0 = get<double>(j, "eps0", "eps.");
  if (j.contains("ratio")) s.ratio = get<double>(j, "ratio", "eps.");
  if (j.contains("steps")) s.steps = get<int>(j, "steps", "eps.");
  if (j.contains("sign")) s.sign = get<int>(j, "sign", "eps.");
  if (j.contains("tolerance")) s.tolerance = get<double>(j, "tolerance", "eps.");
  try {
    s.validate();
  } catch (const ConfigError& e) {
    fail("eps", e.what());
  }
  return s;
}

BoundarySpec parse_boundary(const Json& j) {
  check_keys(j, {"type", "center", "radius", "half_widths", "semi_axes"}, "boundary.");
  BoundarySpec b;
  if (j.contains("type")) b.type = get<std::string>(j, "type", "boundary.");
  if (b.type != "sphere" && b.type != "box" && b.type != "ellipsoid")
    fail("boundary.type", "expected sphere, box or ellipsoid");
  if (j.contains("center")) b.center = get<std::vector<double>>(j, "center", "boundary.");
  if (j.contains("radius")) b.radius = get<double>(j, "radius", "boundary.");
  if (!(b.radius > 0.0)) fail("boundary.radius", "must be positive");
  if (j.contains("half_widths")) b.extents = get<std::vector<double>>(j, "half_widths", "boundary.");
  if (j.contains("semi_axes")) b.extents = get<std::vector<double>>(j, "semi_axes", "boundary.");
  return b;
}

}  // namespace

Boundary BoundarySpec::build(const Signature& sig) const {
  std::vector<double> c = center.empty() ? std::vector<double>(sig.n() + 1, 0.0) : center;
  if (static_cast<int>(c.size()) != sig.n() + 1) fail("boundary.center", "needs p + q + 1 coordinates");
  const Paravector cp = Paravector::real(sig, c);
  if (type == "sphere") return Boundary::sphere(cp, radius);
  std::vector<double> e = extents.empty() ? std::vector<double>(sig.n() + 1, radius) : extents;
  if (static_cast<int>(e.size()) != sig.n() + 1) fail("boundary", "extents need p + q + 1 entries");
  return type == "box" ? Boundary::box(cp, e) : Boundary::ellipsoid(cp, e);
}

const Signature& ExperimentConfig::signature() const {
  if (signatures.empty()) throw ConfigError("field 'signature': missing");
  return signatures.front();
}

Paravector ExperimentConfig::x0_point(const Signature& sig) const {
  std::vector<double> c = x0.empty() ? std::vector<double>(sig.n() + 1, 0.0) : x0;
  if (static_cast<int>(c.size()) != sig.n() + 1) fail("x0", "needs p + q + 1 coordinates");
  return Paravector::real(sig, c);
}

ExperimentConfig parse_experiment(const Json& j) {
  if (!j.is_object()) throw ConfigError("experiment must be a JSON object");
  check_keys(j,
             {"name", "kind", "signature", "signatures", "field", "g_field", "boundary", "x0", "grid", "eps",
              "eps_values", "side", "tolerance", "seed", "samples", "max_n", "degree", "volume_nodes", "fd_step",
              "time_limit", "description"},
             "");
  ExperimentConfig c;
  c.source = j;
  c.kind = get<std::string>(j, "kind", "");
  const ExperimentKind* kind = find_kind(c.kind);
  if (!kind) fail("kind", "unknown experiment kind '" + c.kind + "'");
  c.name = j.contains("name") ? get<std::string>(j, "name", "") : c.kind;
  if (c.name.empty() || c.name.find_first_of("/\\") != std::string::npos) fail("name", "must be a plain file stem");

  if (j.contains("signature")) c.signatures.push_back(parse_signature(j["signature"], "signature"));
  if (j.contains("signatures")) {
    if (!j["signatures"].is_array()) fail("signatures", "expected a list of [p, q]");
    for (std::size_t i = 0; i < j["signatures"].size(); ++i)
      c.signatures.push_back(parse_signature(j["signatures"][i], "signatures[" + std::to_string(i) + "]"));
  }
  if (c.signatures.empty() && kind->needs_signature) fail("signature", "missing");

  if (j.contains("field")) c.field = get<std::string>(j, "field", "");
  if (j.contains("g_field")) c.g_field = get<std::string>(j, "g_field", "");
  if (j.contains("boundary")) c.boundary = parse_boundary(j["boundary"]);
  if (j.contains("x0")) c.x0 = get<std::vector<double>>(j, "x0", "");
  if (j.contains("grid")) c.grid = parse_grid(j["grid"]);
  if (j.contains("eps")) c.eps = parse_eps(j["eps"]);
  if (j.contains("eps_values")) c.eps_values = get<std::vector<double>>(j, "eps_values", "");
  if (j.contains("side")) {
    const auto s = get<std::string>(j, "side", "");
    if (s != "left" && s != "right") fail("side", "expected left or right");
    c.side = s == "left" ? Side::left : Side::right;
  }
  if (j.contains("tolerance")) c.tolerance = get<double>(j, "tolerance", "");
  if (!(c.tolerance > 0.0)) fail("tolerance", "must be positive");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed", "");
  if (j.contains("samples")) c.samples = get<int>(j, "samples", "");
  if (c.samples < 1) fail("samples", "must be positive");
  if (j.contains("max_n")) c.max_n = get<int>(j, "max_n", "");
  if (c.max_n < 1 || c.max_n > 8) fail("max_n", "must lie in [1, 8]");
  if (j.contains("degree")) c.degree = get<int>(j, "degree", "");
  if (c.degree < 0) fail("degree", "must be non-negative");
  if (j.contains("volume_nodes")) c.volume_nodes = get<int>(j, "volume_nodes", "");
  if (c.volume_nodes < 4) fail("volume_nodes", "must be >= 4");
  if (j.contains("fd_step")) c.fd_step = get<double>(j, "fd_step", "");
  if (c.fd_step && !(*c.fd_step > 0.0)) fail("fd_step", "must be positive");
  if (j.contains("time_limit")) c.time_limit = get<double>(j, "time_limit", "");

  kind->validate(c);
  return c;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::size_t start = text.rfind('\n', e.byte > 0 ? e.byte - 1 : 0);
    start = start == std::string::npos ? 0 : start + 1;
    std::size_t end = text.find('\n', start);
    const std::string context = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    throw ConfigError(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what() +
                      "\n  " + context);
  }
}

}  // namespace clifford::harness
