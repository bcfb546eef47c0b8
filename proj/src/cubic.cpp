#include "segre/cubic.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace segre {

SegreCubic SegreCubic::standard() {
  return {MultiPoly::power_sum(kCoords, 1), MultiPoly::power_sum(kCoords, 3)};
}

// ---------------------------------------------------------------------------
// Combinatorial models

TripleSplit TripleSplit::from_triple(std::array<int, 3> triple) {
  std::sort(triple.begin(), triple.end());
  std::array<int, 3> rest{};
  std::size_t k = 0;
  for (int i = 1; i <= 6; ++i)
    if (std::find(triple.begin(), triple.end(), i) == triple.end()) {
      if (k == 3) throw std::invalid_argument("TripleSplit: triple has repeated entries");
      rest[k++] = i;
    }
  if (k != 3 || triple[0] < 1 || triple[2] > 6) throw std::invalid_argument("TripleSplit: not a triple of {1..6}");
  if (triple[0] == 1) return {triple, rest};
  return {rest, triple};
}

bool TripleSplit::same_side(int a, int b) const {
  auto in_first = [this](int x) { return std::find(first.begin(), first.end(), x) != first.end(); };
  return in_first(a) == in_first(b);
}

std::string TripleSplit::to_string() const {
  std::string s = "{";
  for (int x : first) s += std::to_string(x);
  s += '|';
  for (int x : second) s += std::to_string(x);
  return s + "}";
}

Matching Matching::from_pairs(std::array<std::array<int, 2>, 3> pairs) {
  std::array<bool, 7> seen{};
  for (auto& p : pairs) {
    if (p[0] > p[1]) std::swap(p[0], p[1]);
    for (int x : p) {
      if (x < 1 || x > 6 || seen[static_cast<std::size_t>(x)])
        throw std::invalid_argument("Matching: not a perfect matching of {1..6}");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return {pairs};
}

bool Matching::contains_pair(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) { return p[0] == a && p[1] == b; });
}

std::string Matching::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i) s += '|';
    s += std::to_string(pairs[i][0]) + std::to_string(pairs[i][1]);
  }
  return s + "}";
}

std::vector<TripleSplit> all_triple_splits() {
  std::vector<TripleSplit> out;
  for (int b = 2; b <= 6; ++b)
    for (int c = b + 1; c <= 6; ++c) out.push_back(TripleSplit::from_triple({1, b, c}));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> all_matchings() {
  std::vector<Matching> out;
  for (int b = 2; b <= 6; ++b) {
    std::vector<int> rest;
    for (int i = 2; i <= 6; ++i)
      if (i != b) rest.push_back(i);
    // rest has four points; pair rest[0] with each of the others.
    for (std::size_t k = 1; k < 4; ++k) {
      std::vector<int> last;
      for (std::size_t j = 1; j < 4; ++j)
        if (j != k) last.push_back(rest[j]);
      out.push_back(Matching::from_pairs({{{1, b}, {rest[0], rest[k]}, {last[0], last[1]}}}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TripleSplit act(const Perm& g, const TripleSplit& s) {
  return TripleSplit::from_triple({g.apply(s.first[0]), g.apply(s.first[1]), g.apply(s.first[2])});
}

Matching act(const Perm& g, const Matching& m) {
  std::array<std::array<int, 2>, 3> pairs{};
  for (std::size_t i = 0; i < 3; ++i) pairs[i] = {g.apply(m.pairs[i][0]), g.apply(m.pairs[i][1])};
  return Matching::from_pairs(pairs);
}

ProjPoint act(const Perm& g, const ProjPoint& p) {
  if (g.degree() != p.ambient_size()) throw std::invalid_argument("act: degree does not match ambient space");
  std::vector<Rational> c(p.ambient_size());
  for (std::size_t i = 0; i < c.size(); ++i) c[g[i]] = p[i];
  return ProjPoint(std::move(c));
}

ProjPoint node_point(const TripleSplit& s) {
  std::vector<Rational> c(kCoords, Rational(-1));
  for (int i : s.first) c[static_cast<std::size_t>(i - 1)] = 1;
  return ProjPoint(std::move(c));
}

LinearSubspace matching_plane(const Matching& m) {
  Matrix equations;
  for (const auto& p : m.pairs) {
    std::vector<Rational> row(kCoords, Rational(0));
    row[static_cast<std::size_t>(p[0] - 1)] = 1;
    row[static_cast<std::size_t>(p[1] - 1)] = 1;
    equations.push_back(std::move(row));
  }
  return LinearSubspace::solution_set(kCoords, equations);
}

// ---------------------------------------------------------------------------
// Singular points and planes

SingularLocusCertificate certify_singular_locus(const SegreCubic& s) {
  SingularLocusCertificate cert;

  // Gradient rows are (1,...,1) and (3 x_i^2). The rank drops below 2 exactly
  // when every 2x2 minor 3(x_j^2 - x_i^2) vanishes, i.e. all x_i^2 agree.
  std::vector<MultiPoly> grad_lin, grad_cub;
  for (std::size_t i = 0; i < kCoords; ++i) {
    grad_lin.push_back(s.linear.derivative(i));
    grad_cub.push_back(s.cubic.derivative(i));
  }
  cert.minors_identity_verified = true;
  for (std::size_t i = 0; i < kCoords; ++i) {
    for (std::size_t j = i + 1; j < kCoords; ++j) {
      const MultiPoly minor = grad_lin[i] * grad_cub[j] - grad_lin[j] * grad_cub[i];
      const MultiPoly xi = MultiPoly::variable(kCoords, i), xj = MultiPoly::variable(kCoords, j);
      const MultiPoly expected = Rational(3) * (xj * xj - xi * xi);
      cert.minors_identity_verified &= verify_identity(minor, expected);
    }
  }

  // So x_i = +-c with c != 0; scale to c = 1 and run through all signs.
  std::set<ProjPoint> found;
  cert.all_rank_one = true;
  for (unsigned mask = 0; mask < (1U << kCoords); ++mask) {
    ++cert.sign_patterns_examined;
    std::vector<Rational> c(kCoords);
    for (std::size_t i = 0; i < kCoords; ++i) c[i] = (mask >> i) & 1U ? -1 : 1;
    if (poly_eval(s.linear, c) != 0) continue;
    ++cert.zero_sum_patterns;
    ProjPoint p(c);
    if (poly_eval(s.cubic, p) != 0 || jacobian_rank(s.system(), p) != 1) cert.all_rank_one = false;
    found.insert(p);
  }
  cert.projective_points = found.size();
  return cert;
}

std::vector<SingularPoint> enumerate_singular_points(const SegreCubic& s) {
  const SingularLocusCertificate cert = certify_singular_locus(s);
  if (!cert.minors_identity_verified || !cert.all_rank_one || cert.projective_points != 10)
    throw VerificationError("enumerate_singular_points: certificate failed");
  std::vector<SingularPoint> out;
  for (const TripleSplit& split : all_triple_splits()) {
    ProjPoint p = node_point(split);
    if (jacobian_rank(s.system(), p) != 1) throw VerificationError("node " + split.to_string() + " is not singular");
    out.push_back({split, std::move(p)});
  }
  return out;
}

std::vector<PlaneOnCubic> enumerate_planes(const SegreCubic& s) {
  std::vector<PlaneOnCubic> out;
  std::set<LinearSubspace> distinct;
  for (const Matching& m : all_matchings()) {
    LinearSubspace plane = matching_plane(m);
    if (plane.dim() != 2) throw VerificationError("plane " + m.to_string() + " is not 2-dimensional");
    // Parametrize the plane by x_b <- -x_a for each pair (a b).
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < kCoords; ++i) images.push_back(MultiPoly::variable(kCoords, i));
    for (const auto& p : m.pairs)
      images[static_cast<std::size_t>(p[1] - 1)] = -MultiPoly::variable(kCoords, static_cast<std::size_t>(p[0] - 1));
    for (const MultiPoly& f : s.system())
      if (!poly_substitute_linear(f, images).is_zero())
        throw VerificationError("plane " + m.to_string() + " does not lie on the cubic");
    distinct.insert(plane);
    out.push_back({m, std::move(plane)});
  }
  if (distinct.size() != out.size()) throw VerificationError("enumerate_planes: duplicate planes");
  return out;
}

// ---------------------------------------------------------------------------
// Incidence

std::vector<int> IncidenceStructure::row_sums() const {
  std::vector<int> out;
  for (const auto& row : incidence) out.push_back(static_cast<int>(std::count(row.begin(), row.end(), true)));
  return out;
}

std::vector<int> IncidenceStructure::column_sums() const {
  std::vector<int> out(planes.size(), 0);
  for (const auto& row : incidence)
    for (std::size_t j = 0; j < row.size(); ++j) out[j] += row[j];
  return out;
}

std::size_t IncidenceStructure::point_index(const TripleSplit& s) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].split == s) return i;
  throw std::out_of_range("point_index: unknown split " + s.to_string());
}

std::size_t IncidenceStructure::plane_index(const Matching& m) const {
  for (std::size_t i = 0; i < planes.size(); ++i)
    if (planes[i].matching == m) return i;
  throw std::out_of_range("plane_index: unknown matching " + m.to_string());
}

IncidenceStructure build_incidence(std::vector<SingularPoint> points, std::vector<PlaneOnCubic> planes) {
  IncidenceStructure inc{std::move(points), std::move(planes), {}};
  for (const auto& pt : inc.points) {
    std::vector<bool> row;
    for (const auto& pl : inc.planes) {
      const bool combinatorial = std::none_of(pl.matching.pairs.begin(), pl.matching.pairs.end(),
                                              [&](const auto& p) { return pt.split.same_side(p[0], p[1]); });
      const bool geometric = pl.subspace.contains(pt.point);
      if (combinatorial != geometric)
        throw VerificationError("incidence mismatch at " + pt.split.to_string() + " / " + pl.matching.to_string());
      row.push_back(geometric);
    }
    inc.incidence.push_back(std::move(row));
  }
  return inc;
}

const IncidenceStructure& standard_incidence() {
  static const IncidenceStructure inc = [] {
    const SegreCubic s = SegreCubic::standard();
    return build_incidence(enumerate_singular_points(s), enumerate_planes(s));
  }();
  return inc;
}

// ---------------------------------------------------------------------------
// Group actions

GeometricAction s6_geometric_action() {
  const IncidenceStructure& inc = standard_incidence();
  const PermGroup s6 = symmetric_group(6);
  std::vector<Perm> on_points, on_planes;
  for (const Perm& g : s6.generators()) {
    std::vector<int> pi, qi;
    for (const auto& p : inc.points) {
      const TripleSplit img = act(g, p.split);
      if (act(g, p.point) != node_point(img)) throw VerificationError("point action is not equivariant");
      pi.push_back(static_cast<int>(inc.point_index(img)) + 1);
    }
    for (const auto& q : inc.planes) {
      const Matching img = act(g, q.matching);
      std::vector<ProjPoint> moved;
      for (const ProjPoint& b : q.subspace.basis()) moved.push_back(act(g, b));
      if (LinearSubspace(kCoords, moved) != matching_plane(img)) throw VerificationError("plane action is not equivariant");
      qi.push_back(static_cast<int>(inc.plane_index(img)) + 1);
    }
    const Perm gp = Perm::from_images(pi), gq = Perm::from_images(qi);
    for (std::size_t i = 0; i < inc.points.size(); ++i)
      for (std::size_t j = 0; j < inc.planes.size(); ++j)
        if (inc.incidence[i][j] != inc.incidence[gp[i]][gq[j]]) throw VerificationError("action breaks incidence");
    on_points.push_back(gp);
    on_planes.push_back(gq);
  }
  GeometricAction out{GroupHom(s6, 10, on_points), GroupHom(s6, 15, on_planes)};
  if (!out.on_points.is_injective() || !out.on_planes.is_injective())
    throw VerificationError("geometric action is not faithful");
  if (!out.on_points.image().is_transitive() || !out.on_planes.image().is_transitive())
    throw VerificationError("geometric action is not transitive");
  return out;
}

FixedCounts fixed_counts(const Perm& g) {
  if (g.degree() != kCoords) throw std::invalid_argument("fixed_counts: expected a permutation of degree 6");
  FixedCounts c{0, 0};
  for (const auto& s : all_triple_splits()) c.points += act(g, s) == s;
  for (const auto& m : all_matchings()) c.planes += act(g, m) == m;
  return c;
}

FixedCounts fixed_counts(const PermGroup& h) {
  if (h.degree() != kCoords) throw std::invalid_argument("fixed_counts: expected a subgroup of S6");
  FixedCounts c{0, 0};
  for (const auto& s : all_triple_splits())
    c.points += std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& g) { return act(g, s) == s; });
  for (const auto& m : all_matchings())
    c.planes += std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& g) { return act(g, m) == m; });
  return c;
}

PermGroup configuration_automorphisms(const IncidenceStructure& inc) {
  const std::size_t np = inc.points.size();
  std::set<std::uint32_t> plane_masks;
  for (std::size_t j = 0; j < inc.planes.size(); ++j) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < np; ++i)
      if (inc.incidence[i][j]) mask |= 1U << i;
    plane_masks.insert(mask);
  }
  if (plane_masks.size() != inc.planes.size()) throw VerificationError("two planes share the same point set");

  std::vector<std::vector<int>> common(np, std::vector<int>(np, 0));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b)
      for (std::size_t j = 0; j < inc.planes.size(); ++j) common[a][b] += inc.incidence[a][j] && inc.incidence[b][j];

  std::vector<Perm> found;
  std::vector<int> image(np, -1);
  std::vector<bool> used(np, false);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == np) {
      for (std::uint32_t mask : plane_masks) {
        std::uint32_t moved = 0;
        for (std::size_t i = 0; i < np; ++i)
          if (mask >> i & 1U) moved |= 1U << image[i];
        if (!plane_masks.count(moved)) return;
      }
      std::vector<int> one_based(image);
      for (int& v : one_based) ++v;
      found.push_back(Perm::from_images(one_based));
      return;
    }
    for (std::size_t c = 0; c < np; ++c) {
      if (used[c] || common[k][k] != common[c][c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = common[k][j] == common[c][static_cast<std::size_t>(image[j])];
      if (!ok) continue;
      used[c] = true;
      image[k] = static_cast<int>(c);
      extend(k + 1);
      used[c] = false;
    }
    image[k] = -1;
  };
  extend(0);
  return PermGroup::from_elements(np, std::move(found));
}

// ---------------------------------------------------------------------------
// Hyperplane sections x_a + x_b = 0

HyperplaneSection hyperplane_section_planes(const MultiPoly& linear_form) {
  if (linear_form.num_vars() != kCoords || linear_form.degree() != 1 || !linear_form.is_homogeneous() ||
      linear_form.terms().size() != 2)
    throw std::invalid_argument("hyperplane_section_planes: form must be x_a + x_b");
  std::vector<int> idx;
  for (const auto& [e, c] : linear_form.terms()) {
    if (c != 1) throw std::invalid_argument("hyperplane_section_planes: form must be x_a + x_b");
    idx.push_back(static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin()) + 1);
  }
  std::sort(idx.begin(), idx.end());
  const int a = idx[0], b = idx[1];
  std::vector<int> rest;
  for (int i = 1; i <= 6; ++i)
    if (i != a && i != b) rest.push_back(i);
  const int c = rest[0], d = rest[1], e = rest[2], f = rest[3];
  auto x = [](int i) { return MultiPoly::variable(kCoords, static_cast<std::size_t>(i - 1)); };

  HyperplaneSection out{a, b, {}, std::nullopt, MultiPoly(kCoords), MultiPoly(kCoords), false};
  // On x_a + x_b = 0 the linear equation leaves x_c + x_d + x_e + x_f = 0.
  std::vector<MultiPoly> images;
  for (int i = 1; i <= 6; ++i) images.push_back(x(i));
  images[static_cast<std::size_t>(b - 1)] = -x(a);
  images[static_cast<std::size_t>(f - 1)] = -(x(c) + x(d) + x(e));
  out.restricted_cubic = poly_substitute_linear(SegreCubic::standard().cubic, images);
  out.factored = Rational(-3) * (x(c) + x(d)) * (x(c) + x(e)) * (x(d) + x(e));
  out.factorization_verified = verify_identity(out.restricted_cubic, out.factored);

  // Factor x_c + x_d vanishes on {ab|cd|ef}, x_c + x_e on {ab|ce|df}, x_d + x_e on {ab|cf|de}.
  const std::vector<Matching> ms = {Matching::from_pairs({{{a, b}, {c, d}, {e, f}}}),
                                    Matching::from_pairs({{{a, b}, {c, e}, {d, f}}}),
                                    Matching::from_pairs({{{a, b}, {c, f}, {d, e}}})};
  for (const Matching& m : ms) out.planes.push_back({m, matching_plane(m)});
  std::sort(out.planes.begin(), out.planes.end(),
            [](const PlaneOnCubic& p, const PlaneOnCubic& q) { return p.matching < q.matching; });

  LinearSubspace meet = out.planes[0].subspace;
  for (std::size_t k = 1; k < out.planes.size(); ++k) meet = subspace_intersection(meet, out.planes[k].subspace);
  if (meet.dim() == 0) out.common_point = meet.basis().front();
  return out;
}

}  // namespace segre
