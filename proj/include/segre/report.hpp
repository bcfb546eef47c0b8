#pragma once

// Named verification suites and their JSON reports.
//
// Report layout (keys sorted, byte-identical for identical configs):
//   { "suite": "geometry,forms",
//     "checks": [ { "check_id", "status", "expected", "actual", "witness"? } ... ],
//     "summary": { "pass": n, "fail": n, "error": n } }
// Checks appear in check_id order. Integers are exact JSON integers,
// rationals are "num/den" strings, projective points are canonical integer
// coordinate arrays.

#include "segre/cubic.hpp"
#include "segre/exactmath.hpp"
#include "segre/permgroup.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace segre {

using Json = nlohmann::json;

enum class CheckStatus { Pass, Fail, Error };
std::string to_string(CheckStatus s);

struct CheckReport {
  std::string check_id;
  CheckStatus status;
  Json expected;
  Json actual;
  std::optional<Json> witness;
};

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  unsigned workers = 1;
  std::string output_path;  // empty: no file
  std::uint64_t seed = 20240501;

  /// Throws std::invalid_argument on an unknown suite name or zero workers.
  void validate() const;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_known_suite(const std::string& name);

/// Runs one suite. Checks never abort the run: a thrown exception becomes a
/// check with status error.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& config);
/// Runs every selected suite ("all" expands), each at most once.
std::vector<CheckReport> run_suites(const SuiteConfig& config);

Json report_to_json(const std::string& suite_label, const std::vector<CheckReport>& reports);
std::string suite_label(const SuiteConfig& config);
/// Writes report_to_json(...).dump(2) plus a newline; throws std::runtime_error on I/O failure.
void emit_report(const std::string& suite_label, const std::vector<CheckReport>& reports, const std::string& path);
/// 0 if everything passed, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

// Serialization helpers shared by the suites and the golden-file tests.
Json to_json(const Rational& q);
Json to_json(const ProjPoint& p);
Json to_json(const Perm& p);  // cycle notation string
Json to_json(const PermGroup& g);
Json incidence_to_json(const IncidenceStructure& inc);
Json geometric_action_to_json(const GeometricAction& a);

}  // namespace segre
