#include <numbers>
#include <filesystem>
#include <fstream>

#include "clifford/harness/field_selector.hpp"
#include "clifford/harness/runner.hpp"
#include "doctest.h"

using namespace clifford;
using namespace clifford::harness;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("clifford-harness-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string config_error(const Json& j) {
  try {
    parse_experiment(j);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  CHECK(config_error({{"kind", "c-constant"}, {"signature", {1, 0}}}).find("signature") != std::string::npos);
  CHECK(config_error({{"kind", "no-such-kind"}}).find("kind") != std::string::npos);
  CHECK(config_error({{"kind", "second-formula"}, {"signature", {1, 1}}, {"bogus", 1}}).find("bogus") !=
        std::string::npos);
  CHECK(config_error({{"kind", "second-formula"}, {"signature", {1, 1}}, {"field", "fueter:9"}}).find("field") !=
        std::string::npos);
  CHECK(config_error({{"kind", "second-formula"}, {"signature", {1, 1}}, {"x0", {1.0, 0.0, 0.0}}}).find("x0") !=
        std::string::npos);
  CHECK(config_error({{"kind", "second-formula"}, {"signature", {1, 1}}, {"grid", {{"inner_order", 1}}}})
            .find("grid") != std::string::npos);
  CHECK(config_error({{"kind", "first-formula"}, {"signature", {1, 1}}, {"eps_values", {0.0}}}).find("eps_values") !=
        std::string::npos);
  CHECK(config_error({{"kind", "second-formula"}, {"signature", {1, 1}}}).empty());
}

TEST_CASE("parse errors carry line and column") {
  const auto dir = scratch_dir("parse");
  std::filesystem::create_directories(dir);
  const auto path = dir / "bad.json";
  std::ofstream(path) << "{\n  \"name\": \"x\",\n  \"experiments\": [,]\n}\n";
  try {
    read_json_file(path.string());
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
}

TEST_CASE("second formula experiment passes and reports its series") {
  const auto cfg = parse_experiment({{"name", "s11"}, {"kind", "second-formula"}, {"signature", {1, 1}}});
  const Report r = run_experiment(cfg);
  CHECK(r.pass);
  REQUIRE(r.limit.has_value());
  CHECK(r.limit->scalar_part().real() == doctest::Approx(4 * std::numbers::pi).epsilon(1e-3));
  CHECK(r.eps.size() == r.series.size());
  CHECK(r.provenance == Provenance::theorem);

  const std::string csv = to_csv(r);
  CHECK(csv.rfind("experiment,p,q,eps,re_e0,im_e0,re_e1,im_e1,re_e2~2,im_e2~2,re_e12~2,im_e12~2,error_estimate,expected,"
                  "pass\n",
                  0) == 0);
  CHECK(csv.find("limit") != std::string::npos);
}

TEST_CASE("c-constant experiment") {
  const auto r = run_experiment(parse_experiment({{"kind", "c-constant"}, {"signature", {1, 1}}}));
  CHECK(r.pass);
  CHECK(r.provenance == Provenance::derived);
  CHECK(std::abs(r.limit->scalar_part() - Complex(0.0, -1.0)) < 5e-3);
}

TEST_CASE("reruns with the same seed are bit-identical") {
  const Json j{{"kind", "kernel-dirac"}, {"signatures", {{1, 1}}}, {"samples", 10}, {"seed", 5}};
  const auto a = run_experiment(parse_experiment(j));
  const auto b = run_experiment(parse_experiment(j));
  CHECK(a.deviation == b.deviation);
  CHECK(to_json(a)["metrics"] == to_json(b)["metrics"]);
  RunOptions other;
  other.seed = 6;
  CHECK(run_experiment(parse_experiment(j), other).deviation != a.deviation);
}

TEST_CASE("suites: empty, failing row, outputs") {
  const auto dir = scratch_dir("suite");
  SuiteOptions opts;
  opts.out_dir = dir;

  const auto empty = run_suite(Json{{"name", "empty"}, {"experiments", Json::array()}}, opts);
  CHECK(empty.all_pass());
  CHECK(empty.reports.empty());
  CHECK(std::filesystem::exists(dir / "summary.csv"));

  const Json suite{{"name", "mixed"},
                   {"experiments",
                    {{{"name", "ok"}, {"kind", "algebra-exactness"}, {"max_n", 2}},
                     {{"name", "tight"}, {"kind", "jacobian"}, {"samples", 5}, {"tolerance", 1e-30}}}}};
  const auto s = run_suite(suite, opts);
  CHECK_FALSE(s.all_pass());
  CHECK(s.reports[0].pass);
  CHECK_FALSE(s.reports[1].pass);
  CHECK(summary_table(s).find("FAIL") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "ok.json"));
  CHECK(std::filesystem::exists(dir / "tight.csv"));

  CHECK_THROWS_AS(run_suite(Json{{"experiments", {{{"kind", "c-constant"}, {"signature", {2, 0}}}}}}, opts),
                  ConfigError);
}

TEST_CASE("numeric failures are annotated with the experiment") {
  // The Green kernel's pole region reaches into this box, so evaluation fails.
  const Json j{{"name", "pole"},
               {"kind", "stokes"},
               {"signature", {1, 2}},
               {"g_field", "translated-green:2,0,0,0"},
               {"volume_nodes", 4},
               {"grid", {{"outer_nodes", 4}, {"inner_order", 4}, {"inner_panels", 1}}},
               {"boundary", {{"type", "box"}, {"half_widths", {0.5, 0.5, 0.5, 0.5}}, {"center", {0.5, 0.5, 0.5, 0.5}}}}};
  const auto r = run_experiment(parse_experiment(j));
  CHECK_FALSE(r.pass);
  CHECK(r.message.find("stokes 'pole'") == 0);
}

TEST_CASE("time limits fail the run") {
  const auto r = run_experiment(
      parse_experiment({{"kind", "factorization"}, {"samples", 20}, {"time_limit", 1e-9}, {"signatures", {{1, 1}}}}));
  CHECK_FALSE(r.pass);
  CHECK(r.message.find("time limit") != std::string::npos);
}

TEST_CASE("field selectors") {
  const Signature sig(1, 1);
  CHECK_NOTHROW(check_selector("constant", sig));
  CHECK_NOTHROW(check_selector("fueter:2", sig));
  CHECK_NOTHROW(check_selector("translated-green:2,0,0", sig));
  CHECK_THROWS_AS(check_selector("translated-green:2,0", sig), ConfigError);
  CHECK_THROWS_AS(check_selector("fueter:0", sig), ConfigError);
  CHECK_THROWS_AS(check_selector("spline", sig), ConfigError);
  const auto f = make_field("coordinate:1", sig, Space::real_pq);
  CHECK(evaluate(f, Paravector::real(sig, {0.0, 0.25, 0.0})).scalar_part().real() == 0.25);
}

TEST_CASE("default output directory honours the environment") {
  setenv("VERIFY_OUT_DIR", "/tmp/somewhere", 1);
  CHECK(default_output_dir() == "/tmp/somewhere");
  unsetenv("VERIFY_OUT_DIR");
  CHECK(default_output_dir() == "verify-out");
}
