#pragma once

// Permutation groups small enough to store every element.
//
// Groups up to order 720 on at most 16 points are kept as sorted element
// lists, so every algorithm here is an exhaustive search over elements. This
// is enough for S6 and everything that lives inside it.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace segre {

/// Raised when an internal cross-check fails. Seeing one means a bug or a
/// falsified mathematical claim, never bad user input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kMaxDegree = 16;
inline constexpr std::size_t kMaxGroupOrder = 720;

/// A bijection of {1..n}. Products compose right to left: (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);  // identity

  /// One-based image list: images[i-1] is the image of i.
  static Perm from_images(const std::vector<int>& images);
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles);
  /// Cycle notation such as "(1 2)(3 4 5)"; "()" is the identity.
  static Perm parse(std::size_t degree, std::string_view cycles);

  std::size_t degree() const { return degree_; }
  /// Image of the one-based point `i`.
  int apply(int i) const { return image_[static_cast<std::size_t>(i - 1)] + 1; }
  /// Zero-based raw access.
  std::size_t operator[](std::size_t i) const { return image_[i]; }
  std::vector<int> images() const;

  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  /// Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::size_t num_fixed_points() const;
  std::string to_string() const;
  /// Injective 64-bit packing (four bits per image).
  std::uint64_t key() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> image_{};
};

/// g * h * g^-1
Perm conjugate(const Perm& h, const Perm& g);
std::string cycle_type_string(const Perm& p);  // "2^2 1^2"

class PermGroup {
 public:
  explicit PermGroup(std::size_t degree = 0);

  /// The group generated by `generators`; throws std::invalid_argument on
  /// degree mismatch and std::length_error past kMaxGroupOrder elements.
  static PermGroup closure(std::size_t degree, const std::vector<Perm>& generators);
  /// Builds from a complete element list. Generators are picked greedily in
  /// element order; throws VerificationError if the list is not a group.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  /// Sorted ascending by image list; the identity comes first.
  const std::vector<Perm>& elements() const { return elements_; }
  Perm identity() const { return Perm(degree_); }

  bool contains(const Perm& g) const;
  bool contains(const PermGroup& h) const;
  /// Position of `g` in elements(), or -1.
  long index_of(const Perm& g) const;

  bool is_abelian() const;
  /// Orbits on {1..n}, each sorted, ordered by least point.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }
  std::string to_string() const;  // "<(1 2), (1 2 3)> order 6"

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

 private:
  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

PermGroup closure(const std::vector<Perm>& generators);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
/// G x H acting on disjoint domains {1..m} and {m+1..m+n}.
PermGroup direct_product(const PermGroup& g, const PermGroup& h);
/// g * H * g^-1
PermGroup conjugate(const PermGroup& h, const Perm& g);
Perm random_element(const PermGroup& g, std::mt19937_64& rng);

struct ConjugacyClass {
  Perm representative;  // lexicographically least image list in the class
  std::vector<Perm> elements;
};

/// Classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x);

/// Throws std::invalid_argument if the argument is not inside `g`.
PermGroup centralizer(const PermGroup& g, const Perm& x);
PermGroup centralizer(const PermGroup& g, const PermGroup& s);
PermGroup normalizer(const PermGroup& g, const PermGroup& h);
bool is_normal(const PermGroup& g, const PermGroup& h);

template <class Point>
struct OrbitStabilizer {
  std::vector<Point> orbit;  // sorted
  PermGroup stabilizer;
};

/// Orbit and stabilizer of `x` under `act(g, point)`. The action axioms are
/// checked on the generators over the whole orbit first; a violation throws
/// std::invalid_argument.
template <class Point, class Action>
OrbitStabilizer<Point> orbit_and_stabilizer(const PermGroup& g, Action act, const Point& x) {
  const Perm id = g.identity();
  std::set<Point> seen{x};
  std::vector<Point> queue{x};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Point y = queue[head];
    if (!(act(id, y) == y)) throw std::invalid_argument("orbit_and_stabilizer: identity does not act trivially");
    for (const Perm& s : g.generators()) {
      Point z = act(s, y);
      for (const Perm& t : g.generators())
        if (!(act(s * t, y) == act(s, act(t, y))))
          throw std::invalid_argument("orbit_and_stabilizer: action is not compatible with composition");
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }
  std::vector<Perm> stab;
  for (const Perm& e : g.elements())
    if (act(e, x) == x) stab.push_back(e);
  return {std::vector<Point>(seen.begin(), seen.end()), PermGroup::from_elements(g.degree(), std::move(stab))};
}

/// Every subgroup of `g` exactly once, sorted by (order, elements).
///
/// Seeds with the cyclic subgroups and saturates under joins with them until
/// nothing new appears. `workers` threads share each round; the result does
/// not depend on the worker count.
std::vector<PermGroup> all_subgroups(const PermGroup& g, unsigned workers = 1);

struct SubgroupClass {
  PermGroup representative;
  std::size_t class_size;
};

/// One entry per conjugacy class of subgroups, sorted by (order, representative).
std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& g, unsigned workers = 1);

/// True if joining any member of `subs` with any cyclic subgroup of `g`
/// gives a member of `subs` again, i.e. the list is a fixed point of the
/// saturation step.
bool is_join_closed(const PermGroup& g, const std::vector<PermGroup>& subs, unsigned workers = 1);

/// Some x in g with x a x^-1 contained in b, or nullopt if none exists.
/// The returned conjugator is the least one in element order.
std::optional<Perm> is_subconjugate(const PermGroup& a, const PermGroup& b, const PermGroup& g);

/// A homomorphism between permutation groups, given by generator images.
/// The constructor extends to all of `source` and checks the relations; an
/// inconsistent assignment throws VerificationError.
class GroupHom {
 public:
  GroupHom(PermGroup source, std::size_t target_degree, std::vector<Perm> generator_images);

  const PermGroup& source() const { return source_; }
  std::size_t target_degree() const { return target_degree_; }
  const std::vector<Perm>& generator_images() const { return generator_images_; }

  Perm operator()(const Perm& g) const;
  PermGroup image() const;
  PermGroup image_of(const PermGroup& h) const;
  PermGroup kernel() const;
  bool is_injective() const;

 private:
  PermGroup source_;
  std::size_t target_degree_;
  std::vector<Perm> generator_images_;
  std::vector<Perm> images_;  // aligned with source_.elements()
};

/// An automorphism of S6 that is not inner, realized as the action of S6 on
/// the six cosets of the transitive S5 = PGL(2,5) acting on the projective
/// line over F5 (points 0,1,2,3,4,inf labelled 1..6).
GroupHom outer_automorphism_s6();
/// The transitive copy of S5 used above.
PermGroup pgl2_f5_on_six_points();

/// An explicit isomorphism g -> h, or nullopt if none exists.
std::optional<GroupHom> are_isomorphic(const PermGroup& g, const PermGroup& h);

/// Representatives of the conjugacy classes of elements with x^2 = 1, i.e.
/// of homomorphisms C2 -> g up to conjugation. Includes the identity.
std::vector<Perm> classify_homs_c2(const PermGroup& g);

/// All normal subgroups, sorted by (order, elements).
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

}  // namespace segre
