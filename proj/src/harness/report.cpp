#include "clifford/harness/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace clifford::harness {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::theorem: return "theorem";
    case Provenance::derived: return "derived";
    case Provenance::exact: return "exact";
  }
  return "derived";
}

Json multivector_json(const Multivector& m) {
  Json j = Json::object();
  m.for_each_nonzero([&](Mask b, const Complex& c) {
    j[blade_name(b, m.signature(), m.space())] = Json::array({c.real(), c.imag()});
  });
  return j;
}

Json to_json(const Report& r) {
  Json j;
  j["experiment"] = r.experiment;
  j["kind"] = r.kind;
  j["seed"] = r.seed;
  j["config"] = r.config;
  Json series = Json::array();
  for (std::size_t k = 0; k < r.series.size(); ++k) {
    Json row;
    row["eps"] = k < r.eps.size() ? Json(r.eps[k]) : Json();
    row["value"] = multivector_json(r.series[k]);
    if (k < r.extrapolants.size()) row["extrapolant"] = multivector_json(r.extrapolants[k]);
    series.push_back(std::move(row));
  }
  j["series"] = std::move(series);
  j["limit"] = r.limit ? multivector_json(*r.limit) : Json();
  Json expected;
  expected["value"] = r.expected ? multivector_json(*r.expected) : Json();
  expected["source"] = to_string(r.provenance);
  expected["note"] = r.expected_note;
  j["expected"] = std::move(expected);
  j["error_estimate"] = r.error_estimate;
  j["deviation"] = r.deviation;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["wall_time_s"] = r.wall_time;
  j["nodes"] = r.nodes;
  j["metrics"] = r.metrics;
  j["message"] = r.message;
  return j;
}

std::string csv_header(const Signature& sig, Space space) {
  std::string h = "experiment,p,q,eps";
  for (Mask b = 0; b < sig.blade_count(); ++b) {
    const std::string name = blade_name(b, sig, space);
    h += ",re_" + name + ",im_" + name;
  }
  return h + ",error_estimate,expected,pass\n";
}

std::string to_csv(const Report& r) {
  const Signature sig = r.rows.empty() ? Signature(1, 0) : r.rows.front().sig;
  Space space = Space::real_pq;
  for (const auto& row : r.rows)
    if (row.value) {
      space = row.value->space();
      break;
    }
  std::string out = csv_header(sig, space);
  for (const auto& row : r.rows) {
    out += csv_escape(r.experiment) + "," + std::to_string(row.sig.p()) + "," + std::to_string(row.sig.q()) + "," +
           csv_escape(row.eps);
    for (Mask b = 0; b < sig.blade_count(); ++b) {
      if (row.value && row.value->signature() == sig) {
        const Complex c = row.value->coeff(b);
        out += "," + fmt(c.real()) + "," + fmt(c.imag());
      } else {
        out += ",,";
      }
    }
    out += "," + fmt(row.error_estimate) + "," + csv_escape(row.expected) + "," + (row.pass ? "true" : "false") + "\n";
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

void write_report(const Report& r, const std::filesystem::path& dir) {
  write_atomic(dir / (r.experiment + ".json"), to_json(r).dump(2) + "\n");
  write_atomic(dir / (r.experiment + ".csv"), to_csv(r));
}

}  // namespace clifford::harness
