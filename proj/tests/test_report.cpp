#include "segre/report.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace segre;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("serialization helpers") {
  CHECK(to_json(Rational(3, 6)).get<std::string>() == "1/2");
  CHECK(to_json(Rational(-4)).get<std::string>() == "-4/1");
  CHECK(to_json(Rational(0)).get<std::string>() == "0/1");
  CHECK(to_json(ProjPoint{2, 2, 2, -2, -2, -2}).dump() == "[1,1,1,-1,-1,-1]");
  CHECK(to_json(Perm::parse(6, "(1 2)(3 4)")).get<std::string>() == "(1 2)(3 4)");
  const Json g = to_json(symmetric_group(3));
  CHECK(g["order"] == 6);
  CHECK(g["degree"] == 3);
}

TEST_CASE("incidence golden file") {
  const std::string golden = slurp(std::string(SEGRE_GOLDEN_DIR) + "/incidence.json");
  REQUIRE_FALSE(golden.empty());
  CHECK(incidence_to_json(standard_incidence()).dump(2) + "\n" == golden);

  // The golden file itself must describe a (10_6, 15_4) configuration.
  const Json j = Json::parse(golden);
  REQUIRE(j["incidence"].size() == 10);
  for (const auto& row : j["incidence"]) {
    int s = 0;
    for (const auto& v : row) s += v.get<int>();
    CHECK(s == 6);
  }
  for (std::size_t c = 0; c < 15; ++c) {
    int s = 0;
    for (const auto& row : j["incidence"]) s += row[c].get<int>();
    CHECK(s == 4);
  }
}

TEST_CASE("suite configuration") {
  SuiteConfig c;
  CHECK_NOTHROW(c.validate());
  c.suites = {"bogus"};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.suites = {"forms"};
  c.workers = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
  CHECK(is_known_suite("all"));
  CHECK(is_known_suite("lemma-involutions"));
  CHECK_FALSE(is_known_suite("All"));
  CHECK(suite_names().size() == 6);

  SuiteConfig two;
  two.suites = {"forms", "geometry", "forms"};
  CHECK(suite_label(two) == "geometry,forms");
  two.suites = {"all", "forms"};
  CHECK(suite_label(two) == "all");
}

TEST_CASE("reports") {
  const Json empty = report_to_json("geometry", {});
  CHECK(empty.dump() == R"({"checks":[],"suite":"geometry","summary":{"error":0,"fail":0,"pass":0}})");
  CHECK(Json::parse(empty.dump(2)) == empty);
  CHECK(exit_code({}) == 0);

  std::vector<CheckReport> rs = {{"a", CheckStatus::Pass, 1, 1, std::nullopt},
                                 {"b", CheckStatus::Fail, 1, 2, Json{{"why", "x"}}},
                                 {"c", CheckStatus::Error, 1, nullptr, std::nullopt}};
  const Json j = report_to_json("x", rs);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["error"] == 1);
  CHECK(j["checks"][1]["witness"]["why"] == "x");
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(exit_code(rs) == 1);
  rs.erase(rs.begin() + 1);
  CHECK(exit_code(rs) == 1);

  CHECK_THROWS_AS(emit_report("x", rs, "/nonexistent/dir/out.json"), std::runtime_error);
}

TEST_CASE("suite output is deterministic and ordered") {
  SuiteConfig c;
  c.suites = {"forms", "lemma-involutions", "geometry"};
  const auto a = run_suites(c);
  c.workers = 3;
  const auto b = run_suites(c);
  CHECK(report_to_json("x", a).dump(2) == report_to_json("x", b).dump(2));
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].check_id < a[i].check_id);
  for (const auto& r : a) CHECK(r.status == CheckStatus::Pass);

  SuiteConfig other = c;
  other.seed = 99;
  for (const auto& r : run_suites(other)) CHECK(r.status == CheckStatus::Pass);

  CHECK_THROWS_AS(run_suite("bogus", c), std::invalid_argument);
}
