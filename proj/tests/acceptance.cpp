// Acceptance run: one line per criterion, exit status 0 only if all pass.
//
// Each criterion runs its suites in-process, requires every listed check to
// be present and passing, and enforces a wall-clock limit.

#include "segre/report.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace {

using segre::CheckReport;
using segre::CheckStatus;

// Number of conjugacy classes of subgroups of S6, fixed in advance from the
// brute-force oracle in test_subgroup_oracle.cpp.
constexpr std::size_t kOracleClassCount = 56;
constexpr int kRandomizedChecks = 1000;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
  unsigned workers;
  double limit_seconds;  // <= 0: no limit
  std::vector<std::string> required;
  std::function<Outcome(const std::vector<CheckReport>&)> extra;
};

std::vector<CheckReport> run(const std::vector<std::string>& suites, unsigned workers) {
  segre::SuiteConfig config;
  config.suites = suites;
  config.workers = workers;
  return segre::run_suites(config);
}

bool evaluate(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto reports = run(c.suites, c.workers);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::map<std::string, const CheckReport*> by_id;
  std::size_t passed = 0;
  std::string failures;
  for (const auto& r : reports) {
    by_id[r.check_id] = &r;
    if (r.status == CheckStatus::Pass) {
      ++passed;
    } else {
      failures += " " + r.check_id;
    }
  }
  Outcome out;
  for (const auto& id : c.required)
    if (!by_id.count(id)) {
      out.ok = false;
      out.detail += " missing " + id + ";";
    }
  if (!failures.empty()) {
    out.ok = false;
    out.detail += " failing" + failures + ";";
  }
  if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
    out.ok = false;
    out.detail += " over time limit;";
  }
  if (out.ok && c.extra) out = c.extra(reports);

  char timing[96];
  if (c.limit_seconds > 0)
    std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s, %u worker%s)", secs, c.limit_seconds, c.workers,
                  c.workers == 1 ? "" : "s");
  else
    std::snprintf(timing, sizeof timing, "%.2f s (no limit)", secs);
  std::printf("[%s] criterion %d %s: %zu/%zu checks, %s%s\n", out.ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
              passed, reports.size(), timing, out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

Outcome determinism_and_randomized(const std::vector<CheckReport>& first) {
  const std::string a = segre::report_to_json("all", first).dump(2);
  const std::string b = segre::report_to_json("all", run({"all"}, 8)).dump(2);
  Outcome out;
  if (a != b) {
    out.ok = false;
    out.detail = " reports differ between runs;";
  }
  int trials = 0;
  for (const auto& r : first) {
    if (r.check_id.find(".random_") == std::string::npos) continue;
    if (r.status != CheckStatus::Pass) {
      out.ok = false;
      out.detail += " " + r.check_id + " failed;";
    }
    trials += r.actual.get<int>();
  }
  if (trials != kRandomizedChecks) out.ok = false;
  out.detail += " " + std::to_string(trials) + " randomized trials; second run with 8 workers ";
  out.detail += a == b ? "byte-identical (" + std::to_string(a.size()) + " bytes)" : "differs";
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "geometry", {"geometry"}, 1, 1.0,
       {"geometry.singular_point_count", "geometry.singular_points_contain_(1:1:1:-1:-1:-1)",
        "geometry.singular_points_jacobian_ranks", "geometry.plane_count", "geometry.planes_on_cubic",
        "geometry.incidence_row_sums", "geometry.incidence_column_sums"},
       nullptr},
      {2, "configuration", {"configuration"}, 1, 30.0,
       {"configuration.automorphism_group_order", "configuration.automorphisms_equal_induced_image",
        "configuration.induced_actions_injective", "configuration.induced_actions_transitive"},
       nullptr},
      {3, "involution lemma", {"lemma-involutions"}, 1, 10.0,
       {"lemma-involutions.fixed_counts((1 2))", "lemma-involutions.fixed_counts((1 2)(3 4))",
        "lemma-involutions.fixed_counts((1 2)(3 4)(5 6))", "lemma-involutions.centralizer((1 2))~C2xS4",
        "lemma-involutions.centralizer((1 2)(3 4))~C2xD8", "lemma-involutions.centralizer((1 2)(3 4)(5 6))~C2^3:S3",
        "lemma-involutions.centralizer((1 2)(3 4)(5 6))_semidirect_split", "lemma-involutions.point_stabilizer",
        "lemma-involutions.plane_stabilizer", "lemma-involutions.nonstandard_s5_plane_orbits"},
       nullptr},
      {4, "forms", {"forms"}, 1, 10.0,
       {"forms.c2_hom_classes_in_s6", "forms.table", "forms.every_form_has_rational_node", "forms.blowup_crosscheck",
        "forms.outer_automorphism_class_swap"},
       nullptr},
      {5, "subgroup case analysis", {"subgroups", "theorem"}, 8, 300.0,
       {"subgroups.join_saturation_fixed_point", "subgroups.s6_class_count", "theorem.a5free_escapes",
        "theorem.overgroups_of_standard_a5", "theorem.commuting_normal_pairs_trivial", "theorem.fourth_case_geometry"},
       [](const std::vector<CheckReport>& reports) {
         Outcome o;
         std::size_t n = 0;
         for (const auto& r : reports)
           if (r.check_id == "subgroups.s6_class_count") n = r.actual.get<std::size_t>();
         o.ok = n == kOracleClassCount;
         o.detail = " classes " + std::to_string(n) + " vs oracle " + std::to_string(kOracleClassCount);
         return o;
       }},
      {6, "randomized properties and determinism", {"all"}, 1, 0.0,
       {"geometry.random_ring_axioms_and_homogeneity", "configuration.random_action_equivariance",
        "subgroups.random_orbit_stabilizer", "subgroups.random_class_equation"},
       determinism_and_randomized},
  };

  int failed = 0;
  for (const auto& c : criteria) failed += !evaluate(c);
  std::printf("acceptance: %d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
