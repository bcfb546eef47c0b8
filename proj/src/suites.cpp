#include "segre/forms.hpp"
#include "segre/report.hpp"
#include "segre/rigidity.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace segre {

namespace {

// Pre-registered values for the subgroup lattice of S6, computed by the
// independent oracle in tests/test_subgroup_oracle.cpp.
constexpr std::size_t kS6SubgroupCount = 1455;
constexpr std::size_t kS6SubgroupClassCount = 56;

struct Observed {
  Observed(Json a) : actual(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  Observed(Json a, Json w) : actual(std::move(a)), witness(std::move(w)) {}
  Json actual;
  std::optional<Json> witness;
};

class Checks {
 public:
  void add(std::string id, Json expected, const std::function<Observed()>& observe) {
    CheckReport r{std::move(id), CheckStatus::Error, std::move(expected), nullptr, std::nullopt};
    try {
      Observed o = observe();
      r.status = o.actual.dump() == r.expected.dump() ? CheckStatus::Pass : CheckStatus::Fail;
      r.actual = std::move(o.actual);
      r.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      r.actual = {{"exception", e.what()}};
    }
    reports_.push_back(std::move(r));
  }
  std::vector<CheckReport> take() { return std::move(reports_); }

 private:
  std::vector<CheckReport> reports_;
};

const PermGroup& s6() {
  static const PermGroup g = symmetric_group(6);
  return g;
}

Perm p6(const char* cycles) { return Perm::parse(6, cycles); }

Json counts_json(const FixedCounts& c) { return Json::array({c.points, c.planes}); }

MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), exp(0, 2), nterms(0, 4);
  MultiPoly p(kCoords);
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Exponents e(kCoords);
    for (auto& x : e) x = static_cast<std::uint8_t>(exp(rng));
    p += MultiPoly::monomial(Rational(coeff(rng), 1 + std::abs(coeff(rng))), e);
  }
  return p;
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> geometry_suite(const SuiteConfig& config) {
  Checks c;
  const SegreCubic cubic = SegreCubic::standard();

  c.add("geometry.singular_point_count", 10, [&] { return Json(enumerate_singular_points(cubic).size()); });
  c.add("geometry.singular_points_contain_(1:1:1:-1:-1:-1)", true, [&] {
    const auto pts = enumerate_singular_points(cubic);
    const ProjPoint target{1, 1, 1, -1, -1, -1};
    return Json(std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return p.point == target; }));
  });
  c.add("geometry.singular_points_jacobian_ranks", Json(std::vector<int>(10, 1)), [&] {
    Json ranks = Json::array(), pts = Json::array();
    for (const auto& p : enumerate_singular_points(cubic)) {
      ranks.push_back(jacobian_rank(cubic.system(), p.point));
      pts.push_back({{"split", p.split.to_string()}, {"point", to_json(p.point)}});
    }
    return Observed(ranks, pts);
  });
  c.add("geometry.singular_locus_certificate",
        {{"all_rank_one", true}, {"minors_identity", true}, {"projective_points", 10}, {"sign_patterns", 64},
         {"zero_sum_patterns", 20}},
        [&] {
          const auto cert = certify_singular_locus(cubic);
          return Json{{"all_rank_one", cert.all_rank_one},
                      {"minors_identity", cert.minors_identity_verified},
                      {"projective_points", cert.projective_points},
                      {"sign_patterns", cert.sign_patterns_examined},
                      {"zero_sum_patterns", cert.zero_sum_patterns}};
        });
  c.add("geometry.smooth_point_jacobian_rank", 2,
        [&] { return Json(jacobian_rank(cubic.system(), ProjPoint{1, -1, 2, -2, 3, -3})); });
  c.add("geometry.plane_count", 15, [&] { return Json(enumerate_planes(cubic).size()); });
  c.add("geometry.planes_on_cubic", Json(std::vector<bool>(15, true)), [&] {
    Json flags = Json::array();
    for (const auto& pl : enumerate_planes(cubic)) {
      std::vector<MultiPoly> images;
      for (std::size_t i = 0; i < kCoords; ++i) images.push_back(MultiPoly::variable(kCoords, i));
      for (const auto& pr : pl.matching.pairs)
        images[static_cast<std::size_t>(pr[1] - 1)] = -MultiPoly::variable(kCoords, static_cast<std::size_t>(pr[0] - 1));
      flags.push_back(poly_substitute_linear(cubic.linear, images).is_zero() &&
                      poly_substitute_linear(cubic.cubic, images).is_zero() && pl.subspace.dim() == 2);
    }
    return flags;
  });
  c.add("geometry.incidence_row_sums", Json(std::vector<int>(10, 6)),
        [&] { return Json(standard_incidence().row_sums()); });
  c.add("geometry.incidence_column_sums", Json(std::vector<int>(15, 4)),
        [&] { return Json(standard_incidence().column_sums()); });
  c.add("geometry.poly_eval_cubic_at_node", to_json(Rational(0)),
        [&] { return to_json(poly_eval(cubic.cubic, ProjPoint{1, 1, 1, -1, -1, -1})); });
  c.add("geometry.three_planes_meet_in_point", Json::array({0, 0, 0, 0, 1, -1}), [&] {
    const auto a = matching_plane(Matching::from_pairs({{{1, 2}, {3, 4}, {5, 6}}}));
    const auto b = matching_plane(Matching::from_pairs({{{1, 3}, {2, 4}, {5, 6}}}));
    const auto d = matching_plane(Matching::from_pairs({{{1, 4}, {2, 3}, {5, 6}}}));
    const auto meet = subspace_intersection(subspace_intersection(a, b), d);
    if (meet.dim() != 0) return Json{{"dimension", meet.dim()}};
    return to_json(meet.basis().front());
  });
  c.add("geometry.section_factorization_identity", true, [&] {
    auto x = [](std::size_t i) { return MultiPoly::variable(kCoords, i); };
    const MultiPoly lhs = x(0).pow(3) + x(1).pow(3) + x(2).pow(3) - (x(0) + x(1) + x(2)).pow(3);
    const MultiPoly rhs = Rational(-3) * (x(0) + x(1)) * (x(0) + x(2)) * (x(1) + x(2));
    return Json(verify_identity(lhs, rhs));
  });

  constexpr int kTrials = 250;
  c.add("geometry.random_ring_axioms_and_homogeneity", kTrials, [&] {
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> small(-7, 7);
    int ok = 0;
    for (int t = 0; t < kTrials; ++t) {
      const MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
      const bool ring = verify_identity((p + q) * r, p * r + q * r) && verify_identity(p * q, q * p);
      std::vector<Rational> v(kCoords);
      for (auto& z : v) z = Rational(small(rng), 1 + std::abs(small(rng)));
      const Rational lambda(small(rng) == 0 ? 3 : small(rng), 2);
      std::vector<Rational> scaled(v);
      for (auto& z : scaled) z *= lambda;
      const bool homog = poly_eval(cubic.cubic, scaled) == lambda * lambda * lambda * poly_eval(cubic.cubic, v);
      ok += ring && homog;
    }
    return Json(ok);
  });
  return c.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> configuration_suite(const SuiteConfig& config) {
  Checks c;
  const IncidenceStructure& inc = standard_incidence();

  c.add("configuration.incidence_structure", {{"columns", 15}, {"rows", 10}}, [&] {
    return Observed(Json{{"columns", inc.planes.size()}, {"rows", inc.points.size()}}, incidence_to_json(inc));
  });
  c.add("configuration.automorphism_group_order", 720,
        [&] { return Json(configuration_automorphisms(inc).order()); });
  c.add("configuration.automorphisms_equal_induced_image", true, [&] {
    const auto action = s6_geometric_action();
    return Observed(Json(configuration_automorphisms(inc) == action.on_points.image()),
                    geometric_action_to_json(action));
  });
  c.add("configuration.induced_actions_injective", Json::array({true, true}), [&] {
    const auto action = s6_geometric_action();
    return Json::array({action.on_points.is_injective(), action.on_planes.is_injective()});
  });
  c.add("configuration.induced_actions_transitive", Json::array({true, true}), [&] {
    const auto action = s6_geometric_action();
    return Json::array({action.on_points.image().is_transitive(), action.on_planes.image().is_transitive()});
  });
  c.add("configuration.six_cycle_image_found", true, [&] {
    const auto action = s6_geometric_action();
    const Perm img = action.on_points(p6("(1 2 3 4 5 6)"));
    return Observed(Json(configuration_automorphisms(inc).contains(img)), to_json(img));
  });
  c.add("configuration.isomorphic_to_s6", true, [&] {
    const auto iso = are_isomorphic(configuration_automorphisms(inc), s6());
    if (!iso) return Observed(false);
    Json w = Json::array();
    for (const Perm& g : iso->source().generators()) w.push_back({to_json(g), to_json((*iso)(g))});
    return Observed(true, w);
  });

  constexpr int kTrials = 250;
  c.add("configuration.random_action_equivariance", kTrials, [&] {
    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    const auto action = s6_geometric_action();
    std::uniform_int_distribution<std::size_t> pick_point(0, 9), pick_plane(0, 14);
    int ok = 0;
    for (int t = 0; t < kTrials; ++t) {
      const Perm g = random_element(s6(), rng);
      const auto& pt = inc.points[pick_point(rng)];
      const auto& pl = inc.planes[pick_plane(rng)];
      std::vector<ProjPoint> moved;
      for (const auto& b : pl.subspace.basis()) moved.push_back(act(g, b));
      const bool points_ok = act(g, pt.point) == inc.points[action.on_points(g)[inc.point_index(pt.split)]].point;
      const bool planes_ok =
          LinearSubspace(kCoords, moved) == inc.planes[action.on_planes(g)[inc.plane_index(pl.matching)]].subspace;
      ok += points_ok && planes_ok;
    }
    return Json(ok);
  });
  return c.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> lemma_suite(const SuiteConfig&) {
  Checks c;
  const std::vector<std::pair<const char*, FixedCounts>> involutions = {
      {"(1 2)", {4, 3}}, {"(1 2)(3 4)", {2, 3}}, {"(1 2)(3 4)(5 6)", {4, 7}}};
  for (const auto& [cycles, want] : involutions) {
    c.add(std::string("lemma-involutions.fixed_counts(") + cycles + ")", counts_json(want),
          [&] { return counts_json(fixed_counts(p6(cycles))); });
  }

  auto iso_check = [&](const std::string& id, const char* cycles, std::size_t order, const PermGroup& model) {
    c.add(id, {{"isomorphic", true}, {"order", order}}, [&, cycles] {
      const PermGroup cent = centralizer(s6(), p6(cycles));
      const auto iso = are_isomorphic(cent, model);
      Json w = Json::array();
      if (iso)
        for (const Perm& g : cent.generators()) w.push_back({to_json(g), to_json((*iso)(g))});
      return Observed(Json{{"isomorphic", iso.has_value()}, {"order", cent.order()}}, w);
    });
  };
  iso_check("lemma-involutions.centralizer((1 2))~C2xS4", "(1 2)", 48, model_c2_x_s4());
  iso_check("lemma-involutions.centralizer((1 2)(3 4))~C2xD8", "(1 2)(3 4)", 16, model_c2_x_d8());
  iso_check("lemma-involutions.centralizer((1 2)(3 4)(5 6))~C2^3:S3", "(1 2)(3 4)(5 6)", 48, model_c2cubed_s3());
  c.add("lemma-involutions.centralizer((1 2)(3 4)(5 6))_semidirect_split",
        {{"complement_nonabelian", true}, {"complement_order", 6}, {"normal_elementary_abelian_order", 8}}, [&] {
          const auto split = find_semidirect_split(centralizer(s6(), p6("(1 2)(3 4)(5 6)")), 8, 6);
          if (!split) return Observed(Json{{"found", false}});
          return Observed(Json{{"complement_nonabelian", !split->complement.is_abelian()},
                               {"complement_order", split->complement.order()},
                               {"normal_elementary_abelian_order", split->normal.order()}},
                          Json{{"normal", to_json(split->normal)}, {"complement", to_json(split->complement)}});
        });
  c.add("lemma-involutions.model_c2xs4~model_c2^3:s3", true,
        [&] { return Json(are_isomorphic(model_c2_x_s4(), model_c2cubed_s3()).has_value()); });

  c.add("lemma-involutions.point_stabilizer", {{"orbit", 10}, {"stabilizer", 72}}, [&] {
    auto on_splits = [](const Perm& g, const TripleSplit& s) { return act(g, s); };
    const auto os = orbit_and_stabilizer(s6(), on_splits, TripleSplit::from_triple({1, 2, 3}));
    return Observed(Json{{"orbit", os.orbit.size()}, {"stabilizer", os.stabilizer.order()}}, to_json(os.stabilizer));
  });
  c.add("lemma-involutions.plane_stabilizer", {{"orbit", 15}, {"stabilizer", 48}}, [&] {
    auto on_matchings = [](const Perm& g, const Matching& m) { return act(g, m); };
    const auto os = orbit_and_stabilizer(s6(), on_matchings, Matching::from_pairs({{{1, 2}, {3, 4}, {5, 6}}}));
    return Observed(Json{{"orbit", os.orbit.size()}, {"stabilizer", os.stabilizer.order()}}, to_json(os.stabilizer));
  });
  c.add("lemma-involutions.nonstandard_s5_plane_orbits", Json::array({5, 10}),
        [&] { return Observed(Json(s5_plane_orbits(S5Embedding::Nonstandard)), to_json(nonstandard_s5())); });
  c.add("lemma-involutions.fixed_counts_class_function", true, [&] {
    for (const auto& cls : conjugacy_classes(s6())) {
      const FixedCounts want = fixed_counts(cls.representative);
      for (const Perm& g : cls.elements)
        if (fixed_counts(g) != want) return Observed(false, to_json(g));
    }
    return Observed(true);
  });
  return c.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> forms_suite(const SuiteConfig&) {
  Checks c;
  c.add("forms.c2_hom_classes_in_s6", 4, [&] {
    Json reps = Json::array();
    for (const Perm& r : classify_homs_c2(s6())) reps.push_back(to_json(r));
    return Observed(Json(reps.size()), reps);
  });
  c.add("forms.real_form_representatives",
        Json::array({Json::array({"I", "()"}), Json::array({"II", "(1 2)"}), Json::array({"III", "(1 2)(3 4)"}),
                     Json::array({"IV", "(1 2)(3 4)(5 6)"})}),
        [&] {
          Json out = Json::array();
          for (const auto& t : classify_real_forms()) out.push_back({to_string(t.label), to_json(t.representative)});
          return out;
        });
  c.add("forms.table",
        Json::array({Json::array({"I", 720, 10, 15}), Json::array({"II", 48, 4, 3}), Json::array({"III", 16, 2, 3}),
                     Json::array({"IV", 48, 4, 7})}),
        [&] {
          Json rows = Json::array(), table = Json::array();
          for (const auto& t : classify_real_forms()) {
            const FormReport r = twist_report(GaloisImage::generated_by({t.representative}));
            rows.push_back({to_string(t.label), r.automorphism_order, r.rational_points, r.rational_planes});
            table.push_back({{"type", to_string(t.label)},
                             {"group_order", r.automorphism_order},
                             {"structure", r.structure},
                             {"points", r.rational_points},
                             {"planes", r.rational_planes}});
          }
          return Observed(rows, table);
        });
  c.add("forms.automorphism_orders", Json::array({720, 48, 16, 48}), [&] {
    Json out = Json::array();
    for (const auto& t : classify_real_forms())
      out.push_back(form_automorphism_group(GaloisImage::generated_by({t.representative})).order());
    return out;
  });
  c.add("forms.every_form_has_rational_node", true, [&] {
    const auto forms = classify_real_forms();
    return Json(std::all_of(forms.begin(), forms.end(), [](const auto& t) { return rational_counts(t).points >= 1; }));
  });
  c.add("forms.rational_counts_match_fixed_counts_for_all_involutions", true, [&] {
    for (const Perm& g : s6().elements()) {
      if (!(g * g).is_identity()) continue;
      const auto forms = classify_real_forms();
      const auto& t = forms[static_cast<std::size_t>(real_form_label(g))];
      if (rational_counts(t) != fixed_counts(g)) return Observed(false, to_json(g));
    }
    return Observed(true);
  });
  c.add("forms.centralizer_of_six_cycle", 6, [&] {
    return Json(form_automorphism_group(GaloisImage::generated_by({p6("(1 2 3 4 5 6)")})).order());
  });
  c.add("forms.twist_klein_12_34", {{"automorphism_order", 8}, {"planes", 1}, {"points", 2}}, [&] {
    const FormReport r = twist_report(GaloisImage::generated_by({p6("(1 2)"), p6("(3 4)")}));
    return Json{{"automorphism_order", r.automorphism_order}, {"planes", r.rational_planes}, {"points", r.rational_points}};
  });

  c.add("forms.blowup_crosscheck",
        {{"bijection_equivariant", true},
         {"psi_image_transitive", true},
         {"psi_injective", true},
         {"rows", Json::array({Json::array({"()", 10, "1^6", "I", 10, 15}),
                               Json::array({"(4 5)", 4, "2^3", "IV", 4, 7}),
                               Json::array({"(2 3)(4 5)", 2, "2^2 1^2", "III", 2, 3})})},
         {"type_ii_obstructed", true}},
        [&] {
          const auto bc = blowup_model_crosscheck();
          Json rows = Json::array();
          for (const auto& r : bc.rows)
            rows.push_back({to_json(r.conjugation_on_five), r.fixed_pairs, r.twisted_cycle_type, to_string(r.label),
                            r.counts.points, r.counts.planes});
          Json witness = {{"pair_to_node", bc.pair_to_node}};
          Json twisted = Json::array();
          for (const auto& r : bc.rows) twisted.push_back(to_json(r.twisted_image));
          witness["twisted_images"] = twisted;
          return Observed(Json{{"bijection_equivariant", bc.bijection_equivariant},
                               {"psi_image_transitive", bc.psi_image_transitive},
                               {"psi_injective", bc.psi_injective},
                               {"rows", rows},
                               {"type_ii_obstructed", bc.type_ii_obstructed}},
                          witness);
        });
  c.add("forms.outer_automorphism_class_swap", Json::array({"2^3", "2^2 1^2"}), [&] {
    const GroupHom phi = outer_automorphism_s6();
    return Json::array({cycle_type_string(phi(p6("(1 2)"))), cycle_type_string(phi(p6("(1 2)(3 4)")))});
  });
  return c.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> subgroups_suite(const SuiteConfig& config) {
  Checks c;
  const auto subs = all_subgroups(s6(), config.workers);
  const auto classes = subgroups_up_to_conjugacy(s6(), config.workers);

  c.add("subgroups.s6_subgroup_count", kS6SubgroupCount, [&] { return Json(subs.size()); });
  c.add("subgroups.s6_class_count", kS6SubgroupClassCount, [&] {
    Json table = Json::array();
    for (const auto& k : classes)
      table.push_back({{"order", k.representative.order()}, {"class_size", k.class_size}, {"generators", to_json(k.representative)["generators"]}});
    return Observed(Json(classes.size()), table);
  });
  c.add("subgroups.class_sizes_sum_to_total", kS6SubgroupCount, [&] {
    std::size_t total = 0;
    for (const auto& k : classes) total += k.class_size;
    return Json(total);
  });
  c.add("subgroups.join_saturation_fixed_point", true,
        [&] { return Json(is_join_closed(s6(), subs, config.workers)); });
  c.add("subgroups.generators_regenerate", true, [&] {
    return Json(std::all_of(subs.begin(), subs.end(),
                            [](const PermGroup& h) { return PermGroup::closure(h.degree(), h.generators()) == h; }));
  });
  c.add("subgroups.s3_counts", Json::array({6, 4}), [&] {
    const PermGroup s3 = symmetric_group(3);
    return Json::array({all_subgroups(s3).size(), subgroups_up_to_conjugacy(s3).size()});
  });
  c.add("subgroups.s6_normal_subgroup_orders", Json::array({1, 360, 720}), [&] {
    Json out = Json::array();
    for (const auto& n : normal_subgroups(s6())) out.push_back(n.order());
    return out;
  });
  c.add("subgroups.s6_conjugacy_class_count", 11, [&] { return Json(conjugacy_classes(s6()).size()); });

  constexpr int kTrials = 250;
  c.add("subgroups.random_orbit_stabilizer", kTrials, [&] {
    std::mt19937_64 rng(config.seed ^ 0x2545f4914f6cdd1dULL);
    std::uniform_int_distribution<std::size_t> pick_sub(0, subs.size() - 1), pick_split(0, 9), pick_matching(0, 14);
    const auto splits = all_triple_splits();
    const auto matchings = all_matchings();
    auto on_splits = [](const Perm& g, const TripleSplit& s) { return act(g, s); };
    auto on_matchings = [](const Perm& g, const Matching& m) { return act(g, m); };
    int ok = 0;
    for (int t = 0; t < kTrials; ++t) {
      const PermGroup& h = subs[pick_sub(rng)];
      const auto a = orbit_and_stabilizer(h, on_splits, splits[pick_split(rng)]);
      const auto b = orbit_and_stabilizer(h, on_matchings, matchings[pick_matching(rng)]);
      ok += a.orbit.size() * a.stabilizer.order() == h.order() && b.orbit.size() * b.stabilizer.order() == h.order();
    }
    return Json(ok);
  });
  c.add("subgroups.random_class_equation", kTrials, [&] {
    std::mt19937_64 rng(config.seed ^ 0x6a09e667f3bcc908ULL);
    std::uniform_int_distribution<std::size_t> pick_sub(0, subs.size() - 1);
    int ok = 0;
    for (int t = 0; t < kTrials; ++t) {
      const PermGroup& h = subs[pick_sub(rng)];
      std::size_t class_total = 0;
      bool consistent = true;
      for (const auto& k : conjugacy_classes(h)) {
        class_total += k.elements.size();
        consistent &= centralizer(h, k.representative).order() * k.elements.size() == h.order();
      }
      ok += class_total == h.order() && consistent;
    }
    return Json(ok);
  });
  return c.take();
}

// ---------------------------------------------------------------------------

std::vector<CheckReport> theorem_suite(const SuiteConfig& config) {
  Checks c;
  const TheoremWitness witness = verify_a5free_classification(config.workers);

  c.add("theorem.verdict_count", kS6SubgroupClassCount, [&] { return Json(witness.verdicts.size()); });
  c.add("theorem.a5free_escapes", 0, [&] {
    Json table = Json::array();
    for (const auto& v : witness.verdicts) {
      Json row = {{"order", v.subgroup.order()},
                  {"class_size", v.class_size},
                  {"generators", to_json(v.subgroup)["generators"]},
                  {"contains_standard_a5", v.contains_standard_a5}};
      if (v.container) {
        row["verdict"] = to_string(*v.container);
        row["conjugator"] = to_json(*v.conjugator);
      } else {
        row["verdict"] = v.contains_standard_a5 ? "contains-standard-A5" : "ESCAPES";
        row["conjugator"] = v.a5_conjugator ? to_json(*v.a5_conjugator) : Json(nullptr);
      }
      table.push_back(std::move(row));
    }
    return Observed(Json(witness.escapes()), table);
  });
  c.add("theorem.overgroups_of_standard_a5", Json::array({60, 120, 360, 720}), [&] {
    Json orders = Json::array(), gens = Json::array();
    for (const auto& h : overgroups_of_standard_a5(config.workers)) {
      orders.push_back(h.order());
      gens.push_back(to_json(h));
    }
    return Observed(orders, gens);
  });
  c.add("theorem.commuting_normal_pairs_trivial", Json::array({2, 2, 2, 2}), [&] {
    Json counts = Json::array();
    for (const auto& f : overgroups_of_standard_a5(config.workers)) {
      const auto pairs = commuting_normal_factorization(f);
      const bool trivial = std::all_of(pairs.begin(), pairs.end(), [&](const NormalPair& p) {
        return (p.g == f && p.h.order() == 1) || (p.h == f && p.g.order() == 1);
      });
      counts.push_back(trivial ? Json(pairs.size()) : Json("nontrivial pair"));
    }
    return counts;
  });
  c.add("theorem.case_subgroup_orders", Json::array({120, 72, 48, 48}), [&] {
    Json out = Json::array(), w = Json::array();
    for (const auto& cs : case_subgroups()) {
      out.push_back(cs.group.order());
      w.push_back({{"name", to_string(cs.name)}, {"group", to_json(cs.group)}});
    }
    return Observed(out, w);
  });
  c.add("theorem.case_subgroups_pairwise_nonconjugate", true, [&] {
    const auto cases = case_subgroups();
    for (std::size_t i = 0; i < cases.size(); ++i)
      for (std::size_t j = 0; j < cases.size(); ++j)
        if (i != j && is_subconjugate(cases[i].group, cases[j].group, s6()) &&
            cases[i].group.order() == cases[j].group.order())
          return Json(false);
    return Json(true);
  });
  c.add("theorem.nonstandard_s5_is_transitive", Json::array({false, true}), [&] {
    return Json::array({is_standard(nonstandard_s5()), nonstandard_s5().is_transitive()});
  });
  c.add("theorem.standard_s5_plane_orbits", Json::array({15}),
        [&] { return Json(s5_plane_orbits(S5Embedding::Standard)); });
  c.add("theorem.fourth_case_geometry",
        {{"common_point", Json::array({0, 0, 0, 0, 1, -1})},
         {"factorization_verified", true},
         {"orbit", Json::array({"{12|34|56}", "{13|24|56}", "{14|23|56}"})},
         {"orbit_matches_section", true},
         {"point_on_cubic", true},
         {"point_on_planes", true},
         {"stabilizer_order", 48}},
        [&] {
          const auto g = fourth_case_geometry();
          Json orbit = Json::array();
          for (const auto& m : g.plane_orbit) orbit.push_back(m.to_string());
          return Observed(Json{{"common_point", to_json(g.common_point)},
                               {"factorization_verified", g.section.factorization_verified},
                               {"orbit", orbit},
                               {"orbit_matches_section", g.orbit_matches_section},
                               {"point_on_cubic", g.point_on_cubic},
                               {"point_on_planes", g.point_on_planes},
                               {"stabilizer_order", g.stabilizer_order}},
                          Json{{"restricted_cubic", g.section.restricted_cubic.to_string()},
                               {"factored", g.section.factored.to_string()}});
        });
  return c.take();
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "geometry") return geometry_suite(config);
  if (name == "configuration") return configuration_suite(config);
  if (name == "lemma-involutions") return lemma_suite(config);
  if (name == "forms") return forms_suite(config);
  if (name == "subgroups") return subgroups_suite(config);
  if (name == "theorem") return theorem_suite(config);
  if (name == "all") {
    SuiteConfig all = config;
    all.suites = {"all"};
    return run_suites(all);
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace segre
