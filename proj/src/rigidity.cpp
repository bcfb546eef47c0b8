#include "segre/rigidity.hpp"

#include "segre/parallel.hpp"

#include <algorithm>
#include <set>

namespace segre {

namespace {

PermGroup fixing_six(const PermGroup& g) {
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<int> img = s.images();
    img.push_back(6);
    gens.push_back(Perm::from_images(img));
  }
  return PermGroup::closure(6, gens);
}

}  // namespace

PermGroup standard_a5() { return fixing_six(alternating_group(5)); }
PermGroup standard_s5() { return fixing_six(symmetric_group(5)); }
PermGroup nonstandard_s5() { return outer_automorphism_s6().image_of(standard_s5()); }

bool is_standard(const PermGroup& g) {
  if (g.order() != 60 && g.order() != 120) throw std::invalid_argument("is_standard: expected a group of order 60 or 120");
  const auto orbits = g.orbits();
  return std::any_of(orbits.begin(), orbits.end(), [](const auto& o) { return o.size() == 1; });
}

std::string to_string(CaseName c) {
  switch (c) {
    case CaseName::NonstandardS5: return "nonstandard-S5";
    case CaseName::PointStabilizer: return "point-stabilizer";
    case CaseName::PlaneStabilizer: return "plane-stabilizer";
    case CaseName::FourthS4xC2: return "fourth-S4xC2";
  }
  return "?";
}

std::vector<CaseSubgroup> case_subgroups() {
  const PermGroup s6 = symmetric_group(6);
  auto on_splits = [](const Perm& g, const TripleSplit& s) { return act(g, s); };
  auto on_matchings = [](const Perm& g, const Matching& m) { return act(g, m); };
  PermGroup point_stab =
      orbit_and_stabilizer(s6, on_splits, TripleSplit::from_triple({1, 2, 3})).stabilizer;
  PermGroup plane_stab =
      orbit_and_stabilizer(s6, on_matchings, Matching::from_pairs({{{1, 2}, {3, 4}, {5, 6}}})).stabilizer;
  PermGroup fourth = PermGroup::closure(
      6, {Perm::parse(6, "(1 2)"), Perm::parse(6, "(1 2 3 4)"), Perm::parse(6, "(5 6)")});
  return {{CaseName::NonstandardS5, nonstandard_s5()},
          {CaseName::PointStabilizer, std::move(point_stab)},
          {CaseName::PlaneStabilizer, std::move(plane_stab)},
          {CaseName::FourthS4xC2, std::move(fourth)}};
}

std::size_t TheoremWitness::escapes() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.escapes(); }));
}

namespace {

Verdict classify_with(const PermGroup& s6, const PermGroup& a5, const std::vector<CaseSubgroup>& cases,
                      const PermGroup& f, std::size_t class_size) {
  Verdict v{f, class_size, false, std::nullopt, std::nullopt, std::nullopt};
  v.a5_conjugator = is_subconjugate(a5, f, s6);
  v.contains_standard_a5 = v.a5_conjugator.has_value();
  for (const CaseSubgroup& c : cases) {
    if (auto x = is_subconjugate(f, c.group, s6)) {
      v.container = c.name;
      v.conjugator = *x;
      break;
    }
  }
  return v;
}

}  // namespace

Verdict classify_subgroup(const PermGroup& f, std::size_t class_size) {
  return classify_with(symmetric_group(6), standard_a5(), case_subgroups(), f, class_size);
}

TheoremWitness verify_a5free_classification(unsigned workers) {
  const PermGroup s6 = symmetric_group(6);
  const PermGroup a5 = standard_a5();
  const auto cases = case_subgroups();
  const auto classes = subgroups_up_to_conjugacy(s6, workers);
  std::vector<std::optional<Verdict>> slots(classes.size());
  parallel_for(classes.size(), workers, [&](std::size_t i) {
    slots[i] = classify_with(s6, a5, cases, classes[i].representative, classes[i].class_size);
  });
  TheoremWitness w;
  for (auto& s : slots) w.verdicts.push_back(std::move(*s));
  return w;
}

std::vector<PermGroup> overgroups_of_standard_a5(unsigned workers) {
  const PermGroup a5 = standard_a5();
  std::vector<PermGroup> out;
  for (PermGroup& h : all_subgroups(symmetric_group(6), workers))
    if (h.contains(a5)) out.push_back(std::move(h));
  return out;
}

std::vector<NormalPair> commuting_normal_factorization(const PermGroup& f) {
  const auto normals = normal_subgroups(f);
  std::vector<NormalPair> out;
  for (const PermGroup& g : normals) {
    for (const PermGroup& h : normals) {
      const bool commute = std::all_of(g.generators().begin(), g.generators().end(), [&](const Perm& a) {
        return std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& b) { return a * b == b * a; });
      });
      if (!commute) continue;
      std::vector<Perm> gens = g.generators();
      gens.insert(gens.end(), h.generators().begin(), h.generators().end());
      if (PermGroup::closure(f.degree(), gens) == f) out.push_back({g, h});
    }
  }
  return out;
}

std::vector<int> s5_plane_orbits(S5Embedding e) {
  const PermGroup g = e == S5Embedding::Standard ? standard_s5() : nonstandard_s5();
  auto on_matchings = [](const Perm& p, const Matching& m) { return act(p, m); };
  std::set<Matching> seen;
  std::vector<int> lengths;
  for (const Matching& m : all_matchings()) {
    if (seen.count(m)) continue;
    const auto os = orbit_and_stabilizer(g, on_matchings, m);
    seen.insert(os.orbit.begin(), os.orbit.end());
    lengths.push_back(static_cast<int>(os.orbit.size()));
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

FourthCaseGeometry fourth_case_geometry() {
  const PermGroup group = case_subgroups()[3].group;
  auto on_matchings = [](const Perm& p, const Matching& m) { return act(p, m); };
  auto on_points = [](const Perm& p, const ProjPoint& x) { return act(p, x); };
  const auto orbit = orbit_and_stabilizer(group, on_matchings, Matching::from_pairs({{{1, 2}, {3, 4}, {5, 6}}})).orbit;

  HyperplaneSection section =
      hyperplane_section_planes(MultiPoly::variable(kCoords, 4) + MultiPoly::variable(kCoords, 5));
  if (!section.common_point) throw VerificationError("fourth_case_geometry: the three planes have no single common point");
  const ProjPoint p = *section.common_point;

  const auto stab = orbit_and_stabilizer(group, on_points, p).stabilizer;
  const SegreCubic cubic = SegreCubic::standard();
  const bool on_planes = std::all_of(section.planes.begin(), section.planes.end(),
                                     [&](const PlaneOnCubic& q) { return q.subspace.contains(p); });
  const bool on_cubic = poly_eval(cubic.linear, p) == 0 && poly_eval(cubic.cubic, p) == 0;

  std::vector<Matching> section_matchings;
  for (const auto& q : section.planes) section_matchings.push_back(q.matching);
  const bool matches = orbit == section_matchings;
  return {orbit, p, stab.order(), on_planes, on_cubic, std::move(section), matches};
}

}  // namespace segre
