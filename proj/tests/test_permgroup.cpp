#include "segre/permgroup.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace segre;

namespace {

Perm p6(const char* s) { return Perm::parse(6, s); }

const PermGroup& s6() {
  static const PermGroup g = symmetric_group(6);
  return g;
}

std::map<std::string, std::size_t> cycle_type_census(const PermGroup& g) {
  std::map<std::string, std::size_t> out;
  for (const Perm& x : g.elements()) ++out[cycle_type_string(x)];
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm a = p6("(1 2 3)"), b = p6("(1 2)");
  CHECK(a.apply(1) == 2);
  CHECK(a.apply(3) == 1);
  CHECK(a.apply(4) == 4);
  // right to left: (a*b)(1) = a(b(1)) = a(2) = 3
  CHECK((a * b).apply(1) == 3);
  CHECK((a * b).to_string() == "(1 3)");
  CHECK(a.inverse() == p6("(1 3 2)"));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(p6("(1 2)(3 4 5)").order() == 6);
  CHECK(p6("()").to_string() == "()");
  CHECK(p6("(1 2)(3 4)").cycle_type() == std::vector<int>{2, 2, 1, 1});
  CHECK(cycle_type_string(p6("(1 2)(3 4)")) == "2^2 1^2");
  CHECK(cycle_type_string(p6("(1 2)(3 4)(5 6)")) == "2^3");
  CHECK(cycle_type_string(Perm(6)) == "1^6");
  CHECK(p6("(1 2)").num_fixed_points() == 4);
  CHECK(Perm::from_images({2, 1, 3}) == Perm::parse(3, "(1 2)"));
  CHECK(Perm::from_cycles(6, {{1, 2}, {3, 4}}) == p6("(1 2)(3 4)"));
  CHECK(conjugate(p6("(1 2)"), p6("(2 3)")) == p6("(1 3)"));
  CHECK(p6("(1 2)").key() != p6("(2 3)").key());
}

TEST_CASE("permutation parse errors") {
  CHECK_THROWS_AS(p6("(1 7)"), std::invalid_argument);
  CHECK_THROWS_AS(p6("(1 1)"), std::invalid_argument);
  CHECK_THROWS_AS(p6("(1 2)(2 3)"), std::invalid_argument);
  CHECK_THROWS_AS(p6("(1 2"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_images({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm(17), std::invalid_argument);
}

TEST_CASE("standard groups") {
  CHECK(s6().order() == 720);
  CHECK(alternating_group(6).order() == 360);
  CHECK(symmetric_group(1).order() == 1);
  CHECK(s6().elements().front().is_identity());
  CHECK(std::is_sorted(s6().elements().begin(), s6().elements().end()));
  CHECK(s6().is_transitive());
  CHECK_FALSE(s6().is_abelian());
  CHECK(closure({p6("(1 2 3 4 5 6)")}).is_abelian());

  const PermGroup d = direct_product(symmetric_group(2), symmetric_group(3));
  CHECK(d.degree() == 5);
  CHECK(d.order() == 12);
  CHECK(d.orbits() == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});

  const auto census = cycle_type_census(s6());
  CHECK(census.at("2 1^4") == 15);
  CHECK(census.at("2^2 1^2") == 45);
  CHECK(census.at("2^3") == 15);
  CHECK(census.at("6") == 120);
  CHECK(census.size() == 11);

  CHECK_THROWS_AS(PermGroup::closure(6, {Perm::parse(5, "(1 2)")}), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_group(7), std::length_error);
  CHECK_THROWS_AS(PermGroup::from_elements(6, {p6("(1 2)")}), VerificationError);
  CHECK_THROWS_AS(PermGroup::from_elements(6, {Perm(6), p6("(1 2 3)")}), VerificationError);
}

TEST_CASE("conjugacy classes, centralizers and normalizers") {
  const auto classes = conjugacy_classes(s6());
  CHECK(classes.size() == 11);
  std::size_t total = 0;
  for (const auto& k : classes) {
    total += k.elements.size();
    CHECK(centralizer(s6(), k.representative).order() * k.elements.size() == 720);
    CHECK(k.representative == *std::min_element(k.elements.begin(), k.elements.end()));
  }
  CHECK(total == 720);

  CHECK(conjugacy_class(s6(), p6("(1 2)")).size() == 15);
  CHECK(centralizer(s6(), p6("(1 2)")).order() == 48);
  CHECK(centralizer(s6(), p6("(1 2)(3 4)")).order() == 16);
  CHECK(centralizer(s6(), p6("(1 2)(3 4)(5 6)")).order() == 48);
  CHECK(centralizer(s6(), s6()).order() == 1);
  CHECK_THROWS_AS(centralizer(symmetric_group(3), p6("(5 6)")), std::invalid_argument);

  const PermGroup a6 = alternating_group(6);
  CHECK(is_normal(s6(), a6));
  CHECK(normalizer(s6(), a6) == s6());
  const PermGroup c = closure({p6("(1 2)")});
  CHECK_FALSE(is_normal(s6(), c));
  CHECK(normalizer(s6(), c).order() == 48);
}

TEST_CASE("orbit-stabilizer") {
  auto on_points = [](const Perm& g, int i) { return g.apply(i); };
  const auto os = orbit_and_stabilizer(s6(), on_points, 6);
  CHECK(os.orbit.size() == 6);
  CHECK(os.stabilizer.order() == 120);

  auto broken = [](const Perm&, int i) { return i + 1; };
  CHECK_THROWS_AS(orbit_and_stabilizer(s6(), broken, 1), std::invalid_argument);
}

TEST_CASE("Lagrange and the class equation on random subgroups") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    const PermGroup h = closure({random_element(s6(), rng), random_element(s6(), rng)});
    CHECK(720 % h.order() == 0);
    std::size_t total = 0;
    for (const auto& k : conjugacy_classes(h)) {
      total += k.elements.size();
      CHECK(h.order() % k.elements.size() == 0);
      CHECK(centralizer(h, k.representative).order() * k.elements.size() == h.order());
    }
    CHECK(total == h.order());
    auto on_points = [](const Perm& g, int i) { return g.apply(i); };
    for (int i = 1; i <= 6; ++i) {
      const auto os = orbit_and_stabilizer(h, on_points, i);
      CHECK(os.orbit.size() * os.stabilizer.order() == h.order());
    }
    // Centralizers shrink as the centralized set grows.
    const Perm x = random_element(h, rng);
    CHECK(centralizer(s6(), x).contains(centralizer(s6(), h)));
  }
}

TEST_CASE("subgroup lattice of S3 and S4") {
  const auto s3 = all_subgroups(symmetric_group(3));
  CHECK(s3.size() == 6);
  CHECK(subgroups_up_to_conjugacy(symmetric_group(3)).size() == 4);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
  CHECK(subgroups_up_to_conjugacy(symmetric_group(4)).size() == 11);
  CHECK(is_join_closed(symmetric_group(4), all_subgroups(symmetric_group(4))));
  auto partial = all_subgroups(symmetric_group(4));
  partial.pop_back();
  CHECK_FALSE(is_join_closed(symmetric_group(4), partial));
}

TEST_CASE("subgroup enumeration does not depend on the worker count") {
  const PermGroup s5 = symmetric_group(5);
  const auto a = all_subgroups(s5, 1);
  const auto b = all_subgroups(s5, 4);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 156);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("conjugates of subgroups stay subgroups") {
  std::mt19937_64 rng(5);
  const auto subs = all_subgroups(symmetric_group(5));
  for (int t = 0; t < 50; ++t) {
    const PermGroup& h = subs[rng() % subs.size()];
    const Perm g = random_element(symmetric_group(5), rng);
    const PermGroup c = conjugate(h, g);
    CHECK(std::find(subs.begin(), subs.end(), c) != subs.end());
    CHECK(c.order() == h.order());
  }
}

TEST_CASE("subconjugacy") {
  const PermGroup a = closure({p6("(1 2)")});
  const PermGroup b = closure({p6("(5 6)"), p6("(4 5)")});
  const auto x = is_subconjugate(a, b, s6());
  REQUIRE(x);
  CHECK(b.contains(conjugate(a, *x)));
  CHECK_FALSE(is_subconjugate(closure({p6("(1 2)(3 4)")}), b, s6()));
  CHECK_FALSE(is_subconjugate(s6(), b, s6()));
}

TEST_CASE("homomorphisms") {
  const PermGroup s3 = symmetric_group(3);
  // sign map S3 -> S2
  std::vector<Perm> imgs;
  for (const Perm& g : s3.generators())
    imgs.push_back(g.order() == 2 ? Perm::parse(2, "(1 2)") : Perm(2));
  const GroupHom sign(s3, 2, imgs);
  CHECK(sign.kernel().order() == 3);
  CHECK_FALSE(sign.is_injective());
  CHECK(sign.image().order() == 2);

  bool threw = false;
  try {
    GroupHom h(closure({Perm::parse(3, "(1 2 3)")}), 3, {Perm::parse(3, "(1 2)")});
  } catch (const VerificationError&) {
    threw = true;
  }
  CHECK(threw);
  CHECK_THROWS_AS(GroupHom(s3, 3, {}), std::invalid_argument);
}

TEST_CASE("outer automorphism of S6") {
  const GroupHom phi = outer_automorphism_s6();
  CHECK(phi.is_injective());
  CHECK(phi.image() == s6());
  CHECK(pgl2_f5_on_six_points().order() == 120);
  CHECK(pgl2_f5_on_six_points().is_transitive());

  CHECK(cycle_type_string(phi(p6("(1 2)"))) == "2^3");
  CHECK(cycle_type_string(phi(p6("(1 2)(3 4)"))) == "2^2 1^2");
  CHECK(cycle_type_string(phi(p6("(1 2)(3 4)(5 6)"))) == "2 1^4");
  CHECK(cycle_type_string(phi(p6("(1 2 3)"))) == "3^2");
  CHECK(cycle_type_string(phi(p6("(1 2 3 4 5 6)"))) == "3 2 1");

  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const Perm a = random_element(s6(), rng), b = random_element(s6(), rng);
    REQUIRE(phi(a * b) == phi(a) * phi(b));
  }

  // phi o phi is inner: it preserves every cycle type.
  for (const auto& k : conjugacy_classes(s6()))
    CHECK(cycle_type_string(phi(phi(k.representative))) == cycle_type_string(k.representative));
}

TEST_CASE("isomorphism testing") {
  const PermGroup c6 = closure({p6("(1 2 3 4 5 6)")});
  const PermGroup c2xc3 = closure({p6("(1 2)"), p6("(3 4 5)")});
  const PermGroup s3 = closure({p6("(1 2)"), p6("(1 2 3)")});
  auto iso = are_isomorphic(c6, c2xc3);
  REQUIRE(iso);
  CHECK(iso->is_injective());
  CHECK(iso->image() == c2xc3);
  CHECK_FALSE(are_isomorphic(c6, s3));
  CHECK_FALSE(are_isomorphic(s3, closure({p6("(1 2)")})));
  // C4 x C2 versus D8: same order, different structure.
  CHECK_FALSE(are_isomorphic(closure({p6("(1 2 3 4)"), p6("(5 6)")}), closure({p6("(1 2 3 4)"), p6("(1 3)")})));
}

TEST_CASE("involution classes and normal subgroups") {
  const auto reps = classify_homs_c2(s6());
  REQUIRE(reps.size() == 4);
  CHECK(reps[0].is_identity());
  std::vector<std::string> types;
  for (const Perm& r : reps) types.push_back(cycle_type_string(r));
  std::sort(types.begin(), types.end());
  CHECK(types == std::vector<std::string>{"1^6", "2 1^4", "2^2 1^2", "2^3"});

  const auto normals = normal_subgroups(s6());
  std::vector<std::size_t> orders;
  for (const auto& n : normals) orders.push_back(n.order());
  CHECK(orders == std::vector<std::size_t>{1, 360, 720});
  CHECK(normal_subgroups(symmetric_group(4)).size() == 4);

  // Oracle: filter the full lattice by normality.
  for (std::size_t n : {3u, 4u, 5u}) {
    const PermGroup g = symmetric_group(n);
    std::vector<PermGroup> filtered;
    for (const auto& h : all_subgroups(g))
      if (is_normal(g, h)) filtered.push_back(h);
    CHECK(filtered == normal_subgroups(g));
  }
}
