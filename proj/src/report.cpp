#include "segre/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

namespace segre {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"geometry", "configuration", "lemma-involutions",
                                                 "forms",    "subgroups",     "theorem"};
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

void SuiteConfig::validate() const {
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
  for (const auto& s : suites)
    if (!is_known_suite(s)) throw std::invalid_argument("unknown suite: " + s);
}

namespace {

std::vector<std::string> expand(const SuiteConfig& config) {
  std::set<std::string> wanted;
  for (const auto& s : config.suites) {
    if (s == "all") {
      wanted.insert(suite_names().begin(), suite_names().end());
    } else {
      wanted.insert(s);
    }
  }
  std::vector<std::string> out;
  for (const auto& s : suite_names())
    if (wanted.count(s)) out.push_back(s);
  return out;
}

}  // namespace

std::string suite_label(const SuiteConfig& config) {
  const auto suites = expand(config);
  if (suites.size() == suite_names().size()) return "all";
  std::string label;
  for (const auto& s : suites) label += (label.empty() ? "" : ",") + s;
  return label;
}

std::vector<CheckReport> run_suites(const SuiteConfig& config) {
  config.validate();
  std::vector<CheckReport> all;
  for (const auto& s : expand(config)) {
    auto part = run_suite(s, config);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  return all;
}

Json report_to_json(const std::string& label, const std::vector<CheckReport>& reports) {
  Json checks = Json::array();
  std::size_t pass = 0, fail = 0, error = 0;
  for (const auto& r : reports) {
    Json c = {{"check_id", r.check_id},
              {"status", to_string(r.status)},
              {"expected", r.expected},
              {"actual", r.actual}};
    if (r.witness) c["witness"] = *r.witness;
    checks.push_back(std::move(c));
    pass += r.status == CheckStatus::Pass;
    fail += r.status == CheckStatus::Fail;
    error += r.status == CheckStatus::Error;
  }
  return {{"suite", label}, {"checks", checks}, {"summary", {{"pass", pass}, {"fail", fail}, {"error", error}}}};
}

void emit_report(const std::string& label, const std::vector<CheckReport>& reports, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << report_to_json(label, reports).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing report file: " + path);
}

int exit_code(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == CheckStatus::Pass; }) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Serialization

Json to_json(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Json to_json(const ProjPoint& p) { return p.integer_coords(); }

Json to_json(const Perm& p) { return p.to_string(); }

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& s : g.generators()) gens.push_back(to_json(s));
  return {{"degree", g.degree()}, {"order", g.order()}, {"generators", gens}};
}

Json incidence_to_json(const IncidenceStructure& inc) {
  Json points = Json::array(), planes = Json::array(), matrix = Json::array();
  for (std::size_t i = 0; i < inc.points.size(); ++i)
    points.push_back({{"index", i}, {"split", inc.points[i].split.to_string()}, {"coords", to_json(inc.points[i].point)}});
  for (std::size_t j = 0; j < inc.planes.size(); ++j) {
    Json basis = Json::array();
    for (const ProjPoint& b : inc.planes[j].subspace.basis()) basis.push_back(to_json(b));
    planes.push_back({{"index", j}, {"matching", inc.planes[j].matching.to_string()}, {"basis", basis}});
  }
  for (const auto& row : inc.incidence) {
    Json r = Json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    matrix.push_back(r);
  }
  return {{"points", points}, {"planes", planes}, {"incidence", matrix}};
}

Json geometric_action_to_json(const GeometricAction& a) {
  Json gens = Json::array(), on_points = Json::array(), on_planes = Json::array();
  for (const Perm& s : a.on_points.source().generators()) {
    gens.push_back(to_json(s));
    on_points.push_back(a.on_points(s).images());
    on_planes.push_back(a.on_planes(s).images());
  }
  return {{"s6_generators", gens}, {"on_points", on_points}, {"on_planes", on_planes}};
}

}  // namespace segre
