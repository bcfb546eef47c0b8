#include "segre/forms.hpp"

#include <algorithm>

namespace segre {

std::string to_string(FormLabel label) {
  switch (label) {
    case FormLabel::I: return "I";
    case FormLabel::II: return "II";
    case FormLabel::III: return "III";
    case FormLabel::IV: return "IV";
  }
  return "?";
}

GaloisImage GaloisImage::generated_by(const std::vector<Perm>& generators) {
  return {PermGroup::closure(kCoords, generators)};
}

namespace {

Perm canonical_representative(FormLabel label) {
  switch (label) {
    case FormLabel::I: return Perm(6);
    case FormLabel::II: return Perm::parse(6, "(1 2)");
    case FormLabel::III: return Perm::parse(6, "(1 2)(3 4)");
    case FormLabel::IV: return Perm::parse(6, "(1 2)(3 4)(5 6)");
  }
  throw std::invalid_argument("unknown form label");
}

std::string named_structure(FormLabel label) {
  switch (label) {
    case FormLabel::I: return "S6";
    case FormLabel::II: return "C2 x S4";
    case FormLabel::III: return "C2 x D8";
    case FormLabel::IV: return "C2^3 : S3";
  }
  return "?";
}

}  // namespace

FormLabel real_form_label(const Perm& sigma) {
  if (sigma.degree() != kCoords || !(sigma * sigma).is_identity())
    throw std::invalid_argument("real_form_label: expected an element of order <= 2 in S6");
  // Conjugacy in S6 is cycle type; count the 2-cycles.
  const auto ct = sigma.cycle_type();
  switch (std::count(ct.begin(), ct.end(), 2)) {
    case 0: return FormLabel::I;
    case 1: return FormLabel::II;
    case 2: return FormLabel::III;
    default: return FormLabel::IV;
  }
}

std::vector<RealFormType> classify_real_forms() {
  const PermGroup s6 = symmetric_group(6);
  std::vector<RealFormType> out;
  for (const Perm& rep : classify_homs_c2(s6)) {
    const FormLabel label = real_form_label(rep);
    const Perm named = canonical_representative(label);
    if (named.cycle_type() != rep.cycle_type()) throw VerificationError("classify_real_forms: label mismatch");
    out.push_back({label, named});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].label == out[i - 1].label) throw VerificationError("classify_real_forms: two classes with one label");
  return out;
}

PermGroup form_automorphism_group(const GaloisImage& h) { return centralizer(symmetric_group(6), h.subgroup); }

FixedCounts rational_counts(const RealFormType& t) { return fixed_counts(t.representative); }

PermGroup model_c2_x_s4() { return direct_product(symmetric_group(2), symmetric_group(4)); }

PermGroup model_c2_x_d8() {
  const PermGroup square = PermGroup::closure(4, {Perm::parse(4, "(1 2 3 4)"), Perm::parse(4, "(2 4)")});
  return direct_product(symmetric_group(2), square);
}

PermGroup model_c2cubed_s3() {
  // +1 -> 1, -1 -> 2, +2 -> 3, -2 -> 4, +3 -> 5, -3 -> 6
  const Perm flip = Perm::parse(6, "(1 2)");
  const Perm swap12 = Perm::parse(6, "(1 3)(2 4)");
  const Perm rotate = Perm::parse(6, "(1 3 5)(2 4 6)");
  return PermGroup::closure(6, {flip, swap12, rotate});
}

std::string structure_name(const PermGroup& g) {
  struct Model {
    const char* name;
    PermGroup group;
  };
  const std::vector<Model> models = {
      {"S6", symmetric_group(6)},       {"A6", alternating_group(6)},
      {"S5", symmetric_group(5)},       {"A5", alternating_group(5)},
      {"C2 x S4", model_c2_x_s4()},     {"S4", symmetric_group(4)},
      {"C2 x D8", model_c2_x_d8()},     {"D8", PermGroup::closure(4, {Perm::parse(4, "(1 2 3 4)"), Perm::parse(4, "(2 4)")})},
      {"C2^3", PermGroup::closure(6, {Perm::parse(6, "(1 2)"), Perm::parse(6, "(3 4)"), Perm::parse(6, "(5 6)")})},
      {"C2^2", PermGroup::closure(4, {Perm::parse(4, "(1 2)"), Perm::parse(4, "(3 4)")})},
      {"C4", PermGroup::closure(4, {Perm::parse(4, "(1 2 3 4)")})},
      {"S3", symmetric_group(3)},       {"C6", PermGroup::closure(6, {Perm::parse(6, "(1 2 3 4 5 6)")})},
      {"C3", PermGroup::closure(3, {Perm::parse(3, "(1 2 3)")})},
      {"C2", symmetric_group(2)},       {"1", PermGroup(1)},
  };
  for (const auto& m : models)
    if (m.group.order() == g.order() && are_isomorphic(g, m.group)) return m.name;
  return "order " + std::to_string(g.order());
}

FormReport twist_report(const GaloisImage& h) {
  const PermGroup aut = form_automorphism_group(h);
  const FixedCounts counts = fixed_counts(h.subgroup);
  FormReport r{std::nullopt, aut.order(), "", counts.points, counts.planes};
  if (h.subgroup.order() <= 2) {
    const Perm sigma = h.subgroup.elements().back();
    r.label = real_form_label(sigma);
    r.structure = named_structure(*r.label);
  } else {
    r.structure = structure_name(aut);
  }
  return r;
}

std::optional<SemidirectWitness> find_semidirect_split(const PermGroup& g, std::size_t normal_order,
                                                       std::size_t complement_order) {
  if (normal_order * complement_order != g.order()) return std::nullopt;
  const auto subs = all_subgroups(g);
  for (const PermGroup& n : normal_subgroups(g)) {
    if (n.order() != normal_order || !n.is_abelian()) continue;
    const bool exponent_two =
        std::all_of(n.elements().begin(), n.elements().end(), [](const Perm& x) { return (x * x).is_identity(); });
    if (!exponent_two) continue;
    for (const PermGroup& k : subs) {
      if (k.order() != complement_order) continue;
      const bool meets_trivially = std::none_of(k.elements().begin() + 1, k.elements().end(),
                                                [&](const Perm& x) { return n.contains(x); });
      if (meets_trivially) return SemidirectWitness{n, k};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Five-point blow-up model

namespace {

std::vector<std::array<int, 2>> pairs_of_five() {
  std::vector<std::array<int, 2>> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) out.push_back({i, j});
  return out;
}

std::size_t pair_index(const std::vector<std::array<int, 2>>& pairs, int a, int b) {
  if (a > b) std::swap(a, b);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i][0] == a && pairs[i][1] == b) return i;
  throw std::out_of_range("pair_index");
}

Perm include_in_s6(const Perm& g) {
  std::vector<int> img = g.images();
  img.push_back(6);
  return Perm::from_images(img);
}

}  // namespace

BlowupCrosscheck blowup_model_crosscheck() {
  const PermGroup s5 = symmetric_group(5);
  const GroupHom phi = outer_automorphism_s6();
  std::vector<Perm> psi_gens;
  for (const Perm& s : s5.generators()) psi_gens.push_back(phi(include_in_s6(s)));
  GroupHom psi(s5, 6, psi_gens);

  const auto pairs = pairs_of_five();
  const auto splits = all_triple_splits();
  auto split_index = [&](const TripleSplit& s) {
    return static_cast<std::size_t>(std::find(splits.begin(), splits.end(), s) - splits.begin());
  };

  BlowupCrosscheck out{psi, psi.is_injective(), psi.image().is_transitive(), {}, false, {}, true};

  // S5 is transitive on pairs, so a bijection is fixed by the image of {1,2}.
  for (std::size_t start = 0; start < splits.size() && !out.bijection_equivariant; ++start) {
    std::vector<int> map(pairs.size(), -1);
    bool ok = true;
    for (const Perm& g : s5.elements()) {
      const std::size_t p = pair_index(pairs, g.apply(1), g.apply(2));
      const int node = static_cast<int>(split_index(act(psi(g), splits[start])));
      if (map[p] < 0) {
        map[p] = node;
      } else if (map[p] != node) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> sorted(map);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    // Equivariance on generators over every pair.
    for (const Perm& s : s5.generators())
      for (std::size_t p = 0; p < pairs.size() && ok; ++p) {
        const std::size_t q = pair_index(pairs, s.apply(pairs[p][0]), s.apply(pairs[p][1]));
        ok = map[q] == static_cast<int>(split_index(act(psi(s), splits[static_cast<std::size_t>(map[p])])));
      }
    if (ok) {
      out.pair_to_node = map;
      out.bijection_equivariant = true;
    }
  }
  if (!out.bijection_equivariant) throw VerificationError("blowup_model_crosscheck: no equivariant bijection");

  for (const char* cycles : {"()", "(4 5)", "(2 3)(4 5)"}) {
    const Perm sigma = Perm::parse(5, cycles);
    int fixed = 0;
    for (const auto& p : pairs) fixed += pair_index(pairs, sigma.apply(p[0]), sigma.apply(p[1])) == pair_index(pairs, p[0], p[1]);
    const Perm twisted = psi(sigma);
    out.rows.push_back({sigma, fixed, twisted, cycle_type_string(twisted), real_form_label(twisted), fixed_counts(twisted)});
  }

  for (const Perm& t : s5.elements())
    if (!t.is_identity() && (t * t).is_identity() && real_form_label(psi(t)) == FormLabel::II)
      out.type_ii_obstructed = false;
  return out;
}

}  // namespace segre
