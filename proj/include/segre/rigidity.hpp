#pragma once

// Finite group theory behind equivariant rigidity of the Segre cubic: which
// subgroups F of S6 avoid a standard A5, where they embed, and which
// overgroups a standard A5 has.

#include "segre/cubic.hpp"
#include "segre/permgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segre {

/// A5 and S5 on {1..5}, fixing 6.
PermGroup standard_a5();
PermGroup standard_s5();
/// Image of standard_s5() under the outer automorphism; transitive on {1..6}.
PermGroup nonstandard_s5();
/// True if `g` fixes some coordinate index. Throws std::invalid_argument
/// unless |g| is 60 or 120.
bool is_standard(const PermGroup& g);

enum class CaseName { NonstandardS5, PointStabilizer, PlaneStabilizer, FourthS4xC2 };
std::string to_string(CaseName c);

struct CaseSubgroup {
  CaseName name;
  PermGroup group;
};

/// The four containers in fixed order: nonstandard S5, stabilizer of the
/// node {123|456}, stabilizer of the plane {12|34|56}, and S4 on {1..4} x <(5 6)>.
std::vector<CaseSubgroup> case_subgroups();

struct Verdict {
  PermGroup subgroup;                 // class representative F
  std::size_t class_size;
  bool contains_standard_a5;
  std::optional<Perm> a5_conjugator;  // x with x A5 x^-1 <= F
  std::optional<CaseName> container;  // first case subgroup receiving F
  std::optional<Perm> conjugator;     // x with x F x^-1 <= container
  bool escapes() const { return !contains_standard_a5 && !container; }
};

struct TheoremWitness {
  std::vector<Verdict> verdicts;  // one per conjugacy class of subgroups of S6
  std::size_t escapes() const;
};

/// Verdict for a single subgroup F of S6.
Verdict classify_subgroup(const PermGroup& f, std::size_t class_size = 1);
TheoremWitness verify_a5free_classification(unsigned workers = 1);

/// Subgroups of S6 containing standard_a5(), sorted by order.
std::vector<PermGroup> overgroups_of_standard_a5(unsigned workers = 1);

struct NormalPair {
  PermGroup g;
  PermGroup h;
};

/// Ordered pairs (G, H) of normal subgroups of F that commute elementwise
/// and generate F.
std::vector<NormalPair> commuting_normal_factorization(const PermGroup& f);

enum class S5Embedding { Standard, Nonstandard };
/// Sorted orbit lengths on the fifteen planes.
std::vector<int> s5_plane_orbits(S5Embedding e);

struct FourthCaseGeometry {
  std::vector<Matching> plane_orbit;  // orbit of {12|34|56}
  ProjPoint common_point;
  std::size_t stabilizer_order;       // of the common point inside the case group
  bool point_on_planes;
  bool point_on_cubic;
  HyperplaneSection section;          // x5 + x6
  bool orbit_matches_section;
};

FourthCaseGeometry fourth_case_geometry();

}  // namespace segre
