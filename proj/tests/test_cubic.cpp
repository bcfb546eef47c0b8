#include "segre/cubic.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace segre;

namespace {

Perm p6(const char* s) { return Perm::parse(6, s); }

// Brute-force oracle for the fixed configuration elements of a subgroup:
// intersect the fixed sets of its generators, working directly on 3-sets and
// pair sets without going through the library's actions.
std::pair<int, int> oracle_fixed(const std::vector<Perm>& gens) {
  auto image_set = [](const Perm& g, std::set<int> s) {
    std::set<int> out;
    for (int i : s) out.insert(g.apply(i));
    return out;
  };
  int points = 0;
  for (const auto& split : all_triple_splits()) {
    const std::set<int> a(split.first.begin(), split.first.end()), b(split.second.begin(), split.second.end());
    bool fixed = true;
    for (const Perm& g : gens) {
      const auto ga = image_set(g, a);
      fixed &= ga == a || ga == b;
    }
    points += fixed;
  }
  int planes = 0;
  for (const auto& m : all_matchings()) {
    std::set<std::set<int>> pairs;
    for (const auto& pr : m.pairs) pairs.insert({pr[0], pr[1]});
    bool fixed = true;
    for (const Perm& g : gens) {
      std::set<std::set<int>> moved;
      for (const auto& pr : pairs) moved.insert(image_set(g, pr));
      fixed &= moved == pairs;
    }
    planes += fixed;
  }
  return {points, planes};
}

}  // namespace

TEST_CASE("combinatorial dictionary") {
  CHECK(all_triple_splits().size() == 10);
  CHECK(all_matchings().size() == 15);
  const TripleSplit s = TripleSplit::from_triple({4, 5, 6});
  CHECK(s.to_string() == "{123|456}");
  CHECK(s.same_side(1, 3));
  CHECK_FALSE(s.same_side(1, 4));
  CHECK(Matching::from_pairs({{{6, 5}, {2, 1}, {4, 3}}}).to_string() == "{12|34|56}");
  CHECK(Matching::from_pairs({{{1, 2}, {3, 4}, {5, 6}}}).contains_pair(4, 3));
  CHECK_THROWS_AS(TripleSplit::from_triple({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Matching::from_pairs({{{1, 2}, {2, 3}, {5, 6}}}), std::invalid_argument);
  CHECK(node_point(s) == ProjPoint{1, 1, 1, -1, -1, -1});
  CHECK(act(p6("(1 4)"), s).to_string() == "{156|234}");
}

TEST_CASE("singular locus") {
  const SegreCubic cubic = SegreCubic::standard();
  const auto cert = certify_singular_locus(cubic);
  CHECK(cert.minors_identity_verified);
  CHECK(cert.sign_patterns_examined == 64);
  CHECK(cert.zero_sum_patterns == 20);
  CHECK(cert.projective_points == 10);
  CHECK(cert.all_rank_one);

  const auto pts = enumerate_singular_points(cubic);
  REQUIRE(pts.size() == 10);
  for (const auto& p : pts) {
    CHECK(poly_eval(cubic.linear, p.point) == 0);
    CHECK(poly_eval(cubic.cubic, p.point) == 0);
    CHECK(jacobian_rank(cubic.system(), p.point) == 1);
    CHECK(p.point == node_point(p.split));
  }
  CHECK(std::any_of(pts.begin(), pts.end(), [](const auto& p) { return p.point == ProjPoint{1, 1, 1, -1, -1, -1}; }));
}

TEST_CASE("planes") {
  const SegreCubic cubic = SegreCubic::standard();
  const auto planes = enumerate_planes(cubic);
  REQUIRE(planes.size() == 15);
  std::set<LinearSubspace> distinct;
  for (const auto& pl : planes) {
    CHECK(pl.subspace.dim() == 2);
    distinct.insert(pl.subspace);
    // Spot-check points of the plane on the cubic.
    for (const auto& b : pl.subspace.basis()) {
      CHECK(poly_eval(cubic.linear, b) == 0);
      CHECK(poly_eval(cubic.cubic, b) == 0);
    }
  }
  CHECK(distinct.size() == 15);
}

TEST_CASE("incidence structure") {
  const IncidenceStructure& inc = standard_incidence();
  CHECK(inc.row_sums() == std::vector<int>(10, 6));
  CHECK(inc.column_sums() == std::vector<int>(15, 4));
  // Combinatorial rule: a node lies on a plane iff no pair of the matching
  // sits inside one triple.
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 15; ++j) {
      bool expected = true;
      for (const auto& pr : inc.planes[j].matching.pairs) expected &= !inc.points[i].split.same_side(pr[0], pr[1]);
      CHECK(inc.incidence[i][j] == expected);
      CHECK(inc.planes[j].subspace.contains(inc.points[i].point) == expected);
    }
  }
  // Two distinct nodes share exactly two planes.
  for (std::size_t a = 0; a < 10; ++a)
    for (std::size_t b = a + 1; b < 10; ++b) {
      int common = 0;
      for (std::size_t j = 0; j < 15; ++j) common += inc.incidence[a][j] && inc.incidence[b][j];
      CHECK(common == 2);
    }

  auto pts = inc.points;
  std::swap(pts[0].point, pts[1].point);
  CHECK_THROWS_AS(build_incidence(pts, inc.planes), VerificationError);
}

TEST_CASE("S6 acts on the configuration") {
  const auto action = s6_geometric_action();
  CHECK(action.on_points.is_injective());
  CHECK(action.on_planes.is_injective());
  CHECK(action.on_points.image().is_transitive());
  CHECK(action.on_planes.image().is_transitive());
  const PermGroup aut = configuration_automorphisms(standard_incidence());
  CHECK(aut.order() == 720);
  CHECK(aut == action.on_points.image());

  const IncidenceStructure& inc = standard_incidence();
  std::mt19937_64 rng(3);
  const PermGroup s6 = symmetric_group(6);
  for (int t = 0; t < 100; ++t) {
    const Perm g = random_element(s6, rng);
    const Perm gp = action.on_points(g), gl = action.on_planes(g);
    for (std::size_t i = 0; i < 10; ++i) {
      CHECK(act(g, inc.points[i].point) == inc.points[gp[i]].point);
      CHECK(act(g, inc.points[i].split) == inc.points[gp[i]].split);
      for (std::size_t j = 0; j < 15; ++j) CHECK(inc.incidence[i][j] == inc.incidence[gp[i]][gl[j]]);
    }
  }
}

TEST_CASE("fixed counts") {
  CHECK(fixed_counts(Perm(6)) == FixedCounts{10, 15});
  CHECK(fixed_counts(p6("(1 2)")) == FixedCounts{4, 3});
  CHECK(fixed_counts(p6("(1 2)(3 4)")) == FixedCounts{2, 3});
  CHECK(fixed_counts(p6("(1 2)(3 4)(5 6)")) == FixedCounts{4, 7});

  const PermGroup s6 = symmetric_group(6);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const Perm g = random_element(s6, rng), h = random_element(s6, rng);
    // class function
    CHECK(fixed_counts(g) == fixed_counts(conjugate(g, h)));
    // agrees with the brute-force oracle
    const auto [pts, pls] = oracle_fixed({g});
    CHECK(fixed_counts(g) == FixedCounts{pts, pls});
    // adding a generator can only shrink the fixed sets
    const PermGroup one = PermGroup::closure(6, {g}), two = PermGroup::closure(6, {g, h});
    CHECK(fixed_counts(two).points <= fixed_counts(one).points);
    CHECK(fixed_counts(two).planes <= fixed_counts(one).planes);
    const auto [pts2, pls2] = oracle_fixed({g, h});
    CHECK(fixed_counts(two) == FixedCounts{pts2, pls2});
  }

  const auto [kp, kl] = oracle_fixed({p6("(1 2)"), p6("(3 4)")});
  CHECK(fixed_counts(PermGroup::closure(6, {p6("(1 2)"), p6("(3 4)")})) == FixedCounts{kp, kl});
}

TEST_CASE("hyperplane sections x_a + x_b") {
  const auto sec = hyperplane_section_planes(MultiPoly::variable(6, 4) + MultiPoly::variable(6, 5));
  CHECK(sec.a == 5);
  CHECK(sec.b == 6);
  CHECK(sec.factorization_verified);
  REQUIRE(sec.planes.size() == 3);
  for (const auto& pl : sec.planes) CHECK(pl.matching.contains_pair(5, 6));
  REQUIRE(sec.common_point);
  CHECK(*sec.common_point == ProjPoint{0, 0, 0, 0, 1, -1});

  CHECK_THROWS_AS(hyperplane_section_planes(MultiPoly::variable(6, 0)), std::invalid_argument);
  CHECK_THROWS_AS(hyperplane_section_planes(MultiPoly::variable(6, 0) - MultiPoly::variable(6, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hyperplane_section_planes(MultiPoly::variable(6, 0).pow(2)), std::invalid_argument);
}
