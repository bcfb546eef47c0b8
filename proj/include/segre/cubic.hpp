#pragma once

// The Segre cubic {sum x_i = sum x_i^3 = 0} in P^5, its ten nodes, its
// fifteen planes and the S6 symmetry permuting coordinates.
//
// Nodes are indexed by splits of {1..6} into two triples, planes by perfect
// matchings into three pairs. Every geometric statement is checked against
// this combinatorial dictionary.

#include "segre/exactmath.hpp"
#include "segre/permgroup.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace segre {

inline constexpr std::size_t kCoords = 6;

struct SegreCubic {
  MultiPoly linear;  // sum x_i
  MultiPoly cubic;   // sum x_i^3

  static SegreCubic standard();
  std::vector<MultiPoly> system() const { return {linear, cubic}; }
};

/// Unordered partition of {1..6} into two triples; `first` holds 1.
struct TripleSplit {
  std::array<int, 3> first;
  std::array<int, 3> second;

  static TripleSplit from_triple(std::array<int, 3> triple);
  bool same_side(int a, int b) const;
  std::string to_string() const;  // "{123|456}"
  friend auto operator<=>(const TripleSplit&, const TripleSplit&) = default;
};

/// Perfect matching of {1..6}; pairs sorted internally and among themselves.
struct Matching {
  std::array<std::array<int, 2>, 3> pairs;

  static Matching from_pairs(std::array<std::array<int, 2>, 3> pairs);
  bool contains_pair(int a, int b) const;
  std::string to_string() const;  // "{12|34|56}"
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

std::vector<TripleSplit> all_triple_splits();  // 10, sorted
std::vector<Matching> all_matchings();         // 15, sorted

TripleSplit act(const Perm& g, const TripleSplit& s);
Matching act(const Perm& g, const Matching& m);
/// Coordinate permutation: the coordinate at position i moves to g(i).
ProjPoint act(const Perm& g, const ProjPoint& p);

struct SingularPoint {
  TripleSplit split;
  ProjPoint point;  // +1 on split.first, -1 on split.second
};

struct PlaneOnCubic {
  Matching matching;
  LinearSubspace subspace;
};

ProjPoint node_point(const TripleSplit& s);
LinearSubspace matching_plane(const Matching& m);

/// Completeness evidence for the singular locus.
struct SingularLocusCertificate {
  bool minors_identity_verified = false;  // every 2x2 minor is 3(x_j^2 - x_i^2)
  std::size_t sign_patterns_examined = 0;
  std::size_t zero_sum_patterns = 0;
  std::size_t projective_points = 0;
  bool all_rank_one = false;
};

SingularLocusCertificate certify_singular_locus(const SegreCubic& s);
/// The ten nodes sorted by split; throws VerificationError if certification fails.
std::vector<SingularPoint> enumerate_singular_points(const SegreCubic& s);
/// The fifteen matching planes, each checked to lie on the cubic.
std::vector<PlaneOnCubic> enumerate_planes(const SegreCubic& s);

struct IncidenceStructure {
  std::vector<SingularPoint> points;
  std::vector<PlaneOnCubic> planes;
  std::vector<std::vector<bool>> incidence;  // [point][plane]

  std::vector<int> row_sums() const;
  std::vector<int> column_sums() const;
  std::size_t point_index(const TripleSplit& s) const;
  std::size_t plane_index(const Matching& m) const;
};

/// Throws VerificationError if the combinatorial and geometric incidence disagree.
IncidenceStructure build_incidence(std::vector<SingularPoint> points, std::vector<PlaneOnCubic> planes);
const IncidenceStructure& standard_incidence();

struct GeometricAction {
  GroupHom on_points;  // S6 -> Sym(10)
  GroupHom on_planes;  // S6 -> Sym(15)
};

/// Both actions checked to be injective, transitive and incidence-preserving,
/// and to agree with coordinate permutation of the actual points and planes.
GeometricAction s6_geometric_action();

struct FixedCounts {
  int points;
  int planes;
  friend bool operator==(const FixedCounts&, const FixedCounts&) = default;
};

FixedCounts fixed_counts(const Perm& g);
/// Configuration elements fixed by every element of `h`.
FixedCounts fixed_counts(const PermGroup& h);

/// All permutations of the ten points that carry planes to planes, found by
/// backtracking with pairwise common-plane counts as the pruning invariant.
PermGroup configuration_automorphisms(const IncidenceStructure& inc);

struct HyperplaneSection {
  int a, b;                       // the form is x_a + x_b
  std::vector<PlaneOnCubic> planes;
  std::optional<ProjPoint> common_point;
  MultiPoly restricted_cubic;     // cubic after x_b <- -x_a and eliminating the linear equation
  MultiPoly factored;             // -3 (x_c + x_d)(x_c + x_e)(x_d + x_e)
  bool factorization_verified;
};

/// Only forms x_a + x_b (a != b) are supported; anything else throws std::invalid_argument.
HyperplaneSection hyperplane_section_planes(const MultiPoly& linear_form);

}  // namespace segre
