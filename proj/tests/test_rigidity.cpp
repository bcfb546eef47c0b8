#include "segre/rigidity.hpp"

#include <doctest.h>

#include <algorithm>

using namespace segre;

namespace {

Perm p6(const char* s) { return Perm::parse(6, s); }

}  // namespace

TEST_CASE("standard and nonstandard S5") {
  CHECK(standard_a5().order() == 60);
  CHECK(standard_s5().order() == 120);
  CHECK(is_standard(standard_a5()));
  CHECK(is_standard(standard_s5()));
  CHECK_FALSE(is_standard(nonstandard_s5()));
  CHECK(nonstandard_s5().is_transitive());
  CHECK_THROWS_AS(is_standard(symmetric_group(6)), std::invalid_argument);

  CHECK(s5_plane_orbits(S5Embedding::Standard) == std::vector<int>{15});
  CHECK(s5_plane_orbits(S5Embedding::Nonstandard) == std::vector<int>{5, 10});
}

TEST_CASE("case subgroups") {
  const auto cases = case_subgroups();
  REQUIRE(cases.size() == 4);
  CHECK(cases[0].group.order() == 120);
  CHECK(cases[1].group.order() == 72);
  CHECK(cases[2].group.order() == 48);
  CHECK(cases[3].group.order() == 48);
  CHECK(to_string(cases[3].name) == "fourth-S4xC2");
  const PermGroup s6 = symmetric_group(6);
  // The two order-48 cases are not conjugate.
  CHECK_FALSE(is_subconjugate(cases[2].group, cases[3].group, s6));
  CHECK(cases[3].group.contains(p6("(5 6)")));
}

TEST_CASE("single-subgroup verdicts") {
  const auto v = classify_subgroup(PermGroup::closure(6, {p6("(1 2)")}));
  CHECK_FALSE(v.contains_standard_a5);
  REQUIRE(v.container);
  CHECK(*v.container == CaseName::PointStabilizer);
  REQUIRE(v.conjugator);
  CHECK(case_subgroups()[1].group.contains(conjugate(p6("(1 2)"), *v.conjugator)));

  const auto a6 = classify_subgroup(alternating_group(6));
  CHECK(a6.contains_standard_a5);
  CHECK_FALSE(a6.escapes());
}

TEST_CASE("overgroups and factorizations") {
  const auto over = overgroups_of_standard_a5();
  std::vector<std::size_t> orders;
  for (const auto& h : over) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{60, 120, 360, 720});
  for (const auto& f : over) {
    const auto pairs = commuting_normal_factorization(f);
    CHECK(pairs.size() == 2);
    for (const auto& p : pairs) CHECK(std::min(p.g.order(), p.h.order()) == 1);
  }
  // A group that does factor: C2 x C3.
  const auto c6 = commuting_normal_factorization(PermGroup::closure(6, {p6("(1 2)"), p6("(3 4 5)")}));
  CHECK(std::any_of(c6.begin(), c6.end(), [](const NormalPair& p) { return p.g.order() == 2 && p.h.order() == 3; }));
}

TEST_CASE("fourth case geometry") {
  const auto g = fourth_case_geometry();
  CHECK(g.plane_orbit.size() == 3);
  CHECK(g.orbit_matches_section);
  CHECK(g.point_on_planes);
  CHECK(g.point_on_cubic);
  CHECK(g.common_point == ProjPoint{0, 0, 0, 0, 1, -1});
  CHECK(g.stabilizer_order == 48);
  CHECK(g.section.factorization_verified);
}

TEST_CASE("classification of subgroups of S6") {
  const auto w = verify_a5free_classification();
  CHECK(w.verdicts.size() == 56);
  CHECK(w.escapes() == 0);
  const PermGroup s6 = symmetric_group(6);
  const auto cases = case_subgroups();
  std::size_t with_a5 = 0;
  for (const auto& v : w.verdicts) {
    with_a5 += v.contains_standard_a5;
    if (v.contains_standard_a5) {
      CHECK(v.subgroup.contains(conjugate(standard_a5(), *v.a5_conjugator)));
      continue;
    }
    REQUIRE(v.container);
    const auto it = std::find_if(cases.begin(), cases.end(), [&](const CaseSubgroup& c) { return c.name == *v.container; });
    CHECK(it->group.contains(conjugate(v.subgroup, *v.conjugator)));
  }
  CHECK(with_a5 == 4);
}
