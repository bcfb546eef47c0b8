// segre-verify: run the Segre cubic verification suites and write a JSON report.
//
//   segre-verify --suite geometry --suite forms --out report.json
//   segre-verify --suite all --workers 8
//
// Exit status: 0 when every check passes, 1 if any check fails or errors,
// 2 on a usage or I/O error.

#include "segre/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Segre cubic, its real forms and the S6 subgroup case analysis"};
  segre::SuiteConfig config;
  config.suites.clear();
  bool quiet = false;
  app.add_option("--suite", config.suites,
                 "Suite to run (repeatable): geometry, configuration, lemma-involutions, forms, subgroups, theorem, all");
  app.add_option("--workers", config.workers, "Worker threads for the subgroup and theorem suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", config.output_path, "Write the JSON report to this path");
  app.add_option("--seed", config.seed, "Seed for the randomized property checks");
  app.add_flag("-q,--quiet", quiet, "Only print the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (config.suites.empty()) config.suites = {"all"};

  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "segre-verify: " << e.what() << '\n';
    return 2;
  }

  const auto reports = segre::run_suites(config);
  std::size_t pass = 0;
  for (const auto& r : reports) {
    pass += r.status == segre::CheckStatus::Pass;
    if (quiet && r.status == segre::CheckStatus::Pass) continue;
    std::cout << (r.status == segre::CheckStatus::Pass ? "[PASS] " : r.status == segre::CheckStatus::Fail ? "[FAIL] " : "[ERROR] ")
              << r.check_id;
    if (r.status != segre::CheckStatus::Pass)
      std::cout << "\n    expected: " << r.expected.dump() << "\n    actual:   " << r.actual.dump();
    std::cout << '\n';
  }
  std::cout << segre::suite_label(config) << ": " << pass << "/" << reports.size() << " checks passed\n";

  if (!config.output_path.empty()) {
    try {
      segre::emit_report(segre::suite_label(config), reports, config.output_path);
    } catch (const std::exception& e) {
      std::cerr << "segre-verify: " << e.what() << '\n';
      return 2;
    }
  }
  return segre::exit_code(reports);
}
