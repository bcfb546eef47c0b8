#include "segre/forms.hpp"
#include "segre/report.hpp"
#include "segre/rigidity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace segre;

namespace {

Perm perm(const std::string& cycles) { return Perm::parse(kCoords, cycles); }

PermGroup group(const std::vector<std::string>& generators) {
  std::vector<Perm> gens;
  for (const auto& g : generators) gens.push_back(perm(g));
  return PermGroup::closure(kCoords, gens);
}

std::string run_report(const std::vector<std::string>& suites, unsigned workers, std::uint64_t seed) {
  SuiteConfig config;
  config.suites = suites;
  config.workers = workers;
  config.seed = seed;
  const auto reports = run_suites(config);
  return report_to_json(suite_label(config), reports).dump(2) + "\n";
}

py::dict form_row(const FormReport& r) {
  py::dict d;
  d["label"] = r.label ? py::cast(to_string(*r.label)) : py::none();
  d["automorphism_order"] = r.automorphism_order;
  d["structure"] = r.structure;
  d["points"] = r.rational_points;
  d["planes"] = r.rational_planes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification of the Segre cubic and its S6 symmetry";

  // Errors from bad input surface as ValueError; failed internal cross-checks
  // as RuntimeError.
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  m.def("suite_names", &suite_names, "Suite names accepted by run_report (besides \"all\").");
  m.def("run_report", &run_report, py::arg("suites") = std::vector<std::string>{"all"}, py::arg("workers") = 1u,
        py::arg("seed") = SuiteConfig{}.seed,
        "Run suites and return the JSON report text (byte-identical to the CLI's --out file).",
        py::call_guard<py::gil_scoped_release>());

  m.def("singular_points", [] {
    std::vector<std::pair<std::string, std::vector<long>>> out;
    for (const auto& p : enumerate_singular_points(SegreCubic::standard()))
      out.emplace_back(p.split.to_string(), p.point.integer_coords());
    return out;
  }, "The ten nodes as (triple split, canonical integer coordinates).");

  m.def("planes", [] {
    std::vector<std::pair<std::string, std::vector<std::vector<long>>>> out;
    for (const auto& pl : enumerate_planes(SegreCubic::standard())) {
      std::vector<std::vector<long>> basis;
      for (const auto& b : pl.subspace.basis()) basis.push_back(b.integer_coords());
      out.emplace_back(pl.matching.to_string(), basis);
    }
    return out;
  }, "The fifteen planes as (matching, RREF basis).");

  m.def("incidence", [] {
    std::vector<std::vector<int>> out;
    for (const auto& row : standard_incidence().incidence) out.emplace_back(row.begin(), row.end());
    return out;
  }, "10 x 15 node/plane incidence matrix.");

  m.def("jacobian_rank", [](const std::vector<long>& coords) {
    std::vector<Rational> q(coords.begin(), coords.end());
    return jacobian_rank(SegreCubic::standard().system(), ProjPoint(q));
  }, py::arg("coords"), "Jacobian rank of the defining equations at a point of the cubic.");

  m.def("fixed_counts", [](const std::vector<std::string>& generators) {
    const FixedCounts c = fixed_counts(group(generators));
    return std::make_pair(c.points, c.planes);
  }, py::arg("generators"), "Nodes and planes fixed by the subgroup of S6 generated by the given cycles.");

  m.def("centralizer_order", [](const std::vector<std::string>& generators) {
    return centralizer(symmetric_group(6), group(generators)).order();
  }, py::arg("generators"));

  m.def("outer_automorphism", [](const std::string& cycles) { return outer_automorphism_s6()(perm(cycles)).to_string(); },
        py::arg("cycles"), "Image under the fixed non-inner automorphism of S6.");

  m.def("cycle_type", [](const std::string& cycles) { return cycle_type_string(perm(cycles)); }, py::arg("cycles"));

  m.def("real_forms", [] {
    py::list out;
    for (const auto& f : classify_real_forms()) {
      py::dict d = form_row(twist_report(GaloisImage::generated_by({f.representative})));
      d["representative"] = f.representative.to_string();
      out.append(d);
    }
    return out;
  }, "The four real forms with automorphism group order and rational nodes and planes.");

  m.def("twist_report", [](const std::vector<std::string>& generators) {
    std::vector<Perm> gens;
    for (const auto& g : generators) gens.push_back(perm(g));
    return form_row(twist_report(GaloisImage::generated_by(gens)));
  }, py::arg("generators"), "Form data for a Galois image given by generators.");

  m.def("subgroup_class_count", [](unsigned workers) { return subgroups_up_to_conjugacy(symmetric_group(6), workers).size(); },
        py::arg("workers") = 1u, py::call_guard<py::gil_scoped_release>());

  m.def("a5free_escapes", [](unsigned workers) { return verify_a5free_classification(workers).escapes(); },
        py::arg("workers") = 1u, py::call_guard<py::gil_scoped_release>(),
        "Subgroup classes avoiding a standard A5 that fit none of the four case subgroups.");

  m.attr("__version__") = "0.1.0";
}
