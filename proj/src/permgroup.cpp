#include "segre/permgroup.hpp"

#include "segre/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace segre {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::size_t degree) : degree_(static_cast<std::uint8_t>(degree)) {
  if (degree > kMaxDegree) throw std::invalid_argument("Perm: degree exceeds 16");
  for (std::size_t i = 0; i < degree; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_images(const std::vector<int>& images) {
  Perm p(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || hit[v - 1])
      throw std::invalid_argument("Perm::from_images: not a bijection of {1..n}");
    hit[v - 1] = true;
    p.image_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      if (a < 1 || static_cast<std::size_t>(a) > degree || used[a - 1])
        throw std::invalid_argument("Perm::from_cycles: bad or repeated point");
      used[a - 1] = true;
      images[a - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return from_images(images);
}

Perm Perm::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* current = nullptr;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (c == '(') {
      if (current) throw std::invalid_argument("Perm::parse: nested '('");
      current = &cycles.emplace_back();
      ++i;
    } else if (c == ')') {
      if (!current) throw std::invalid_argument("Perm::parse: unmatched ')'");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!current) throw std::invalid_argument("Perm::parse: point outside a cycle");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      current->push_back(v);
    } else if (c == ' ' || c == ',') {
      ++i;
    } else {
      throw std::invalid_argument("Perm::parse: unexpected character");
    }
  }
  if (current) throw std::invalid_argument("Perm::parse: unterminated cycle");
  return from_cycles(degree, cycles);
}

std::vector<int> Perm::images() const {
  std::vector<int> out(degree_);
  for (std::size_t i = 0; i < degree_; ++i) out[i] = image_[i] + 1;
  return out;
}

Perm Perm::inverse() const {
  Perm p(degree_);
  for (std::size_t i = 0; i < degree_; ++i) p.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < degree_; ++i)
    if (image_[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::size_t Perm::order() const {
  std::size_t o = 1;
  for (int len : cycle_type()) o = std::lcm(o, static_cast<std::size_t>(len));
  return o;
}

std::size_t Perm::num_fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < degree_; ++i) n += image_[i] == i;
  return n;
}

std::string Perm::to_string() const {
  std::string s;
  std::array<bool, kMaxDegree> seen{};
  for (std::size_t i = 0; i < degree_; ++i) {
    if (seen[i] || image_[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      if (j != i) s += ' ';
      s += std::to_string(j + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < degree_; ++i) k |= std::uint64_t(image_[i]) << (4 * i);
  return k;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("Perm: degree mismatch in product");
  Perm p(a.degree_);
  for (std::size_t i = 0; i < a.degree_; ++i) p.image_[i] = a.image_[b.image_[i]];
  return p;
}

Perm conjugate(const Perm& h, const Perm& g) { return g * h * g.inverse(); }

std::string cycle_type_string(const Perm& p) {
  std::map<int, int, std::greater<>> counts;
  for (int len : p.cycle_type()) ++counts[len];
  std::string s;
  for (const auto& [len, mult] : counts) {
    if (!s.empty()) s += ' ';
    s += std::to_string(len);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree) : degree_(degree), elements_{Perm(degree)} {}

PermGroup PermGroup::closure(std::size_t degree, const std::vector<Perm>& generators) {
  PermGroup g(degree);
  for (const Perm& s : generators) {
    if (s.degree() != degree) throw std::invalid_argument("closure: generator degree mismatch");
    if (!s.is_identity()) g.generators_.push_back(s);
  }
  std::unordered_set<std::uint64_t> seen{g.elements_.front().key()};
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const Perm& s : g.generators_) {
      Perm y = g.elements_[head] * s;
      if (seen.insert(y.key()).second) {
        if (g.elements_.size() == kMaxGroupOrder)
          throw std::length_error("closure: group order exceeds 720");
        g.elements_.push_back(y);
      }
    }
  }
  std::sort(g.elements_.begin(), g.elements_.end());
  return g;
}

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != Perm(degree))
    throw VerificationError("from_elements: identity missing");
  std::vector<Perm> gens;
  PermGroup current(degree);
  for (const Perm& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = closure(degree, gens);
  }
  if (current.elements_ != elements) throw VerificationError("from_elements: element list is not closed");
  return current;
}

bool PermGroup::contains(const Perm& g) const {
  return g.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

bool PermGroup::contains(const PermGroup& h) const {
  return std::all_of(h.generators_.begin(), h.generators_.end(), [&](const Perm& s) { return contains(s); });
}

long PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return -1;
  return static_cast<long>(it - elements_.begin());
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> label(degree_, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (label[start] >= 0) continue;
    std::vector<int> orbit{static_cast<int>(start)};
    label[start] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& s : generators_) {
        const auto y = s[static_cast<std::size_t>(orbit[head])];
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orbit.push_back(static_cast<int>(y));
        }
      }
    }
    for (int& p : orbit) ++p;
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::string PermGroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += generators_[i].to_string();
  }
  return s + "> order " + std::to_string(order());
}

PermGroup closure(const std::vector<Perm>& generators) {
  if (generators.empty()) return PermGroup(0);
  return PermGroup::closure(generators.front().degree(), generators);
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup(n);
  std::vector<int> cycle(n);
  std::iota(cycle.begin(), cycle.end(), 1);
  return PermGroup::closure(n, {Perm::from_cycles(n, {{1, 2}}), Perm::from_cycles(n, {cycle})});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup(n);
  std::vector<Perm> gens;
  for (int k = 3; k <= static_cast<int>(n); ++k) gens.push_back(Perm::from_cycles(n, {{1, 2, k}}));
  return PermGroup::closure(n, gens);
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
  const std::size_t m = g.degree(), n = m + h.degree();
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<int> img = s.images();
    for (std::size_t i = m; i < n; ++i) img.push_back(static_cast<int>(i) + 1);
    gens.push_back(Perm::from_images(img));
  }
  for (const Perm& s : h.generators()) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 1);
    for (int v : s.images()) img.push_back(v + static_cast<int>(m));
    gens.push_back(Perm::from_images(img));
  }
  return PermGroup::closure(n, gens);
}

PermGroup conjugate(const PermGroup& h, const Perm& g) {
  std::vector<Perm> gens;
  for (const Perm& s : h.generators()) gens.push_back(conjugate(s, g));
  return PermGroup::closure(h.degree(), gens);
}

Perm random_element(const PermGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  return g.elements()[pick(rng)];
}

// ---------------------------------------------------------------------------
// Conjugacy, centralizers, normalizers

std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x) {
  std::set<Perm> cls;
  for (const Perm& e : g.elements()) cls.insert(conjugate(x, e));
  return {cls.begin(), cls.end()};
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjugacyClass> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    ConjugacyClass c{g.elements()[i], conjugacy_class(g, g.elements()[i])};
    for (const Perm& y : c.elements) assigned[static_cast<std::size_t>(g.index_of(y))] = true;
    out.push_back(std::move(c));
  }
  return out;
}

PermGroup centralizer(const PermGroup& g, const Perm& x) {
  if (!g.contains(x)) throw std::invalid_argument("centralizer: element not in group");
  std::vector<Perm> elems;
  for (const Perm& e : g.elements())
    if (e * x == x * e) elems.push_back(e);
  return PermGroup::from_elements(g.degree(), std::move(elems));
}

PermGroup centralizer(const PermGroup& g, const PermGroup& s) {
  if (s.degree() != g.degree() || !g.contains(s)) throw std::invalid_argument("centralizer: subgroup not in group");
  std::vector<Perm> elems;
  for (const Perm& e : g.elements()) {
    const bool commutes = std::all_of(s.generators().begin(), s.generators().end(),
                                      [&](const Perm& t) { return e * t == t * e; });
    if (commutes) elems.push_back(e);
  }
  return PermGroup::from_elements(g.degree(), std::move(elems));
}

namespace {

bool normalizes(const Perm& e, const PermGroup& h) {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Perm& t) { return h.contains(conjugate(t, e)); });
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& h) {
  std::vector<Perm> elems;
  for (const Perm& e : g.elements())
    if (normalizes(e, h)) elems.push_back(e);
  return PermGroup::from_elements(g.degree(), std::move(elems));
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!g.contains(h)) return false;
  return std::all_of(g.generators().begin(), g.generators().end(), [&](const Perm& e) { return normalizes(e, h); });
}

// ---------------------------------------------------------------------------
// Subgroup lattice

namespace {

constexpr std::size_t kWords = (kMaxGroupOrder + 63) / 64;
using ElementSet = std::array<std::uint64_t, kWords>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : s) h = (h ^ w) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

inline bool has(const ElementSet& s, std::size_t i) { return (s[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(ElementSet& s, std::size_t i) { s[i >> 6] |= std::uint64_t(1) << (i & 63); }

std::vector<std::uint16_t> members(const ElementSet& s) {
  std::vector<std::uint16_t> out;
  for (std::size_t w = 0; w < kWords; ++w) {
    std::uint64_t bits = s[w];
    while (bits) {
      out.push_back(static_cast<std::uint16_t>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

/// Multiplication table of a group over element indices.
class Table {
 public:
  explicit Table(const PermGroup& g) : group_(g), n_(g.order()), mult_(n_ * n_), inv_(n_) {
    if (n_ > kMaxGroupOrder) throw std::length_error("subgroup enumeration: order bound exceeded");
    const auto& el = g.elements();
    for (std::size_t a = 0; a < n_; ++a) {
      inv_[a] = static_cast<std::uint16_t>(g.index_of(el[a].inverse()));
      for (std::size_t b = 0; b < n_; ++b) mult_[a * n_ + b] = static_cast<std::uint16_t>(g.index_of(el[a] * el[b]));
    }
  }
  std::size_t size() const { return n_; }
  std::uint16_t mul(std::size_t a, std::size_t b) const { return mult_[a * n_ + b]; }
  std::uint16_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t index(const Perm& p) const { return static_cast<std::size_t>(group_.index_of(p)); }
  const PermGroup& group() const { return group_; }

  /// Closure of `base` (already a subgroup) together with `gens`.
  ElementSet join(const ElementSet& base, const std::vector<std::uint16_t>& gens) const {
    ElementSet out = base;
    std::vector<std::uint16_t> queue = members(base);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto s : gens) {
        const auto y = mul(queue[head], s);
        if (!has(out, y)) {
          set_bit(out, y);
          queue.push_back(y);
        }
      }
    }
    return out;
  }

 private:
  const PermGroup& group_;
  std::size_t n_;
  std::vector<std::uint16_t> mult_;
  std::vector<std::uint16_t> inv_;
};

struct SubgroupRecord {
  ElementSet elements;
  std::vector<std::uint16_t> gens;
};

std::vector<ElementSet> enumerate_subgroups(const Table& t, unsigned workers) {
  std::vector<SubgroupRecord> records;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  const ElementSet trivial = [] {
    ElementSet s{};
    set_bit(s, 0);
    return s;
  }();

  // Seeds: one cyclic subgroup per element.
  std::vector<std::uint16_t> cyclic_gens;
  for (std::size_t x = 0; x < t.size(); ++x) {
    ElementSet s = t.join(trivial, {static_cast<std::uint16_t>(x)});
    if (seen.emplace(s, records.size()).second) {
      records.push_back({s, x == 0 ? std::vector<std::uint16_t>{} : std::vector<std::uint16_t>{static_cast<std::uint16_t>(x)}});
      if (x != 0) cyclic_gens.push_back(static_cast<std::uint16_t>(x));
    }
  }

  // Saturate: join every new subgroup with every cyclic subgroup until no new
  // subgroup appears. Closure under these joins implies closure under all
  // pairwise joins, since <A, B> is reached by adding B's cyclic generators.
  std::vector<std::size_t> frontier(records.size());
  std::iota(frontier.begin(), frontier.end(), 0);
  while (!frontier.empty()) {
    std::vector<std::vector<SubgroupRecord>> found(frontier.size());
    parallel_for(frontier.size(), workers, [&](std::size_t i) {
      const SubgroupRecord& h = records[frontier[i]];
      std::unordered_set<ElementSet, ElementSetHash> local;
      for (auto c : cyclic_gens) {
        if (has(h.elements, c)) continue;
        std::vector<std::uint16_t> gens = h.gens;
        gens.push_back(c);
        ElementSet j = t.join(h.elements, gens);
        if (seen.count(j) || !local.insert(j).second) continue;
        found[i].push_back({j, std::move(gens)});
      }
    });
    std::vector<std::size_t> next;
    for (auto& batch : found) {
      for (auto& rec : batch) {
        if (seen.emplace(rec.elements, records.size()).second) {
          next.push_back(records.size());
          records.push_back(std::move(rec));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::vector<std::uint16_t>, ElementSet>> keyed;
  keyed.reserve(records.size());
  for (const auto& r : records) keyed.emplace_back(members(r.elements), r.elements);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<ElementSet> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

// The lattice of a given group is fixed, so repeated requests (several
// checks ask for the subgroups of S6) reuse the first enumeration.
const std::vector<ElementSet>& cached_subgroups(const Table& t, unsigned workers) {
  static std::mutex mu;
  static std::map<std::vector<Perm>, std::vector<ElementSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t.group().elements());
  if (it == cache.end()) it = cache.emplace(t.group().elements(), enumerate_subgroups(t, workers)).first;
  return it->second;
}

PermGroup to_group(const Table& t, const ElementSet& s) {
  std::vector<Perm> elems;
  for (auto i : members(s)) elems.push_back(t.group().elements()[i]);
  return PermGroup::from_elements(t.group().degree(), std::move(elems));
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& g, unsigned workers) {
  const Table t(g);
  const auto& sets = cached_subgroups(t, workers);
  std::vector<PermGroup> out(sets.size());
  parallel_for(sets.size(), workers, [&](std::size_t i) { out[i] = to_group(t, sets[i]); });
  return out;
}

std::vector<SubgroupClass> subgroups_up_to_conjugacy(const PermGroup& g, unsigned workers) {
  const Table t(g);
  const auto& sets = cached_subgroups(t, workers);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> position;
  for (std::size_t i = 0; i < sets.size(); ++i) position.emplace(sets[i], i);

  std::vector<std::vector<std::uint16_t>> conj_maps;
  for (const Perm& s : g.generators()) {
    const std::size_t si = t.index(s), sinv = t.inv(si);
    std::vector<std::uint16_t> m(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) m[x] = t.mul(t.mul(si, x), sinv);
    conj_maps.push_back(std::move(m));
  }

  // `sets` is sorted by (order, member list), so the first member of each
  // orbit met in this scan is the canonical representative.
  std::vector<bool> done(sets.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> reps;  // (index, class size)
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit{i};
    done[i] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const auto elems = members(sets[orbit[head]]);
      for (const auto& m : conj_maps) {
        ElementSet img{};
        for (auto x : elems) set_bit(img, m[x]);
        const auto it = position.find(img);
        if (it == position.end()) throw VerificationError("subgroups_up_to_conjugacy: conjugate subgroup missing");
        if (!done[it->second]) {
          done[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    }
    reps.emplace_back(i, orbit.size());
  }
  std::vector<SubgroupClass> out(reps.size(), SubgroupClass{PermGroup(g.degree()), 0});
  parallel_for(reps.size(), workers, [&](std::size_t k) {
    out[k] = SubgroupClass{to_group(t, sets[reps[k].first]), reps[k].second};
  });
  return out;
}

bool is_join_closed(const PermGroup& g, const std::vector<PermGroup>& subs, unsigned workers) {
  const Table t(g);
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<ElementSet> sets;
  std::vector<std::vector<std::uint16_t>> sub_gens;
  for (const PermGroup& h : subs) {
    std::vector<std::uint16_t> gi;
    for (const Perm& s : h.generators()) gi.push_back(static_cast<std::uint16_t>(t.index(s)));
    sub_gens.push_back(std::move(gi));
    ElementSet s{};
    for (const Perm& x : h.elements()) {
      if (!g.contains(x)) return false;
      set_bit(s, t.index(x));
    }
    known.insert(s);
    sets.push_back(s);
  }
  ElementSet trivial{};
  set_bit(trivial, 0);
  std::vector<std::uint16_t> cyclic_gens;
  std::unordered_set<ElementSet, ElementSetHash> cyclic;
  for (std::size_t x = 1; x < t.size(); ++x)
    if (cyclic.insert(t.join(trivial, {static_cast<std::uint16_t>(x)})).second)
      cyclic_gens.push_back(static_cast<std::uint16_t>(x));

  std::vector<char> ok(sets.size(), 1);
  parallel_for(sets.size(), workers, [&](std::size_t i) {
    for (std::size_t k = 0; k < cyclic_gens.size() && ok[i]; ++k) {
      const auto c = cyclic_gens[k];
      if (has(sets[i], c)) continue;
      std::vector<std::uint16_t> gens = sub_gens[i];
      gens.push_back(static_cast<std::uint16_t>(c));
      ok[i] = known.count(t.join(sets[i], gens)) != 0;
    }
  });
  return std::all_of(ok.begin(), ok.end(), [](char b) { return b != 0; });
}

std::optional<Perm> is_subconjugate(const PermGroup& a, const PermGroup& b, const PermGroup& g) {
  if (b.order() % a.order() != 0) return std::nullopt;
  if (!g.contains(a) || !g.contains(b)) throw std::invalid_argument("is_subconjugate: arguments not in group");
  // x A x^-1 <= B holds for the whole right coset N x, N = N_G(B).
  const PermGroup norm = normalizer(g, b);
  std::vector<bool> covered(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    const Perm& x = g.elements()[i];
    for (const Perm& n : norm.elements()) covered[static_cast<std::size_t>(g.index_of(n * x))] = true;
    const bool fits = std::all_of(a.generators().begin(), a.generators().end(),
                                  [&](const Perm& s) { return b.contains(conjugate(s, x)); });
    if (fits) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Homomorphisms

GroupHom::GroupHom(PermGroup source, std::size_t target_degree, std::vector<Perm> generator_images)
    : source_(std::move(source)), target_degree_(target_degree), generator_images_(std::move(generator_images)) {
  const auto& gens = source_.generators();
  if (gens.size() != generator_images_.size())
    throw std::invalid_argument("GroupHom: one image per generator required");
  for (const Perm& p : generator_images_)
    if (p.degree() != target_degree_) throw std::invalid_argument("GroupHom: image degree mismatch");

  // Extend along the Cayley graph and check phi(s x) = phi(s) phi(x) on every
  // edge; by induction on word length this makes phi multiplicative.
  std::vector<bool> assigned(source_.order(), false);
  images_.assign(source_.order(), Perm(target_degree_));
  assigned[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto y = static_cast<std::size_t>(source_.index_of(gens[k] * source_.elements()[x]));
      Perm img = generator_images_[k] * images_[x];
      if (!assigned[y]) {
        assigned[y] = true;
        images_[y] = std::move(img);
        queue.push_back(y);
      } else if (images_[y] != img) {
        throw VerificationError("GroupHom: generator images do not satisfy the source relations");
      }
    }
  }
  if (queue.size() != source_.order()) throw VerificationError("GroupHom: generators do not span the source");
}

Perm GroupHom::operator()(const Perm& g) const {
  const long i = source_.index_of(g);
  if (i < 0) throw std::invalid_argument("GroupHom: element not in source group");
  return images_[static_cast<std::size_t>(i)];
}

PermGroup GroupHom::image() const { return PermGroup::closure(target_degree_, generator_images_); }

PermGroup GroupHom::image_of(const PermGroup& h) const {
  std::vector<Perm> gens;
  for (const Perm& s : h.generators()) gens.push_back((*this)(s));
  return PermGroup::closure(target_degree_, gens);
}

PermGroup GroupHom::kernel() const {
  std::vector<Perm> elems;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i].is_identity()) elems.push_back(source_.elements()[i]);
  return PermGroup::from_elements(source_.degree(), std::move(elems));
}

bool GroupHom::is_injective() const { return kernel().order() == 1; }

PermGroup pgl2_f5_on_six_points() {
  // Points 0..4 of F5 get labels 1..5, infinity gets 6.
  constexpr int kInf = 5;
  auto mobius = [](int a, int b, int c, int d) {
    auto inv_mod5 = [](int x) {
      for (int y = 1; y < 5; ++y)
        if ((x * y) % 5 == 1) return y;
      throw VerificationError("pgl2_f5: zero has no inverse");
    };
    std::vector<int> images(6);
    for (int x = 0; x <= kInf; ++x) {
      int num, den;
      if (x == kInf) {
        num = a;
        den = c;
      } else {
        num = (a * x + b) % 5;
        den = (c * x + d) % 5;
      }
      images[static_cast<std::size_t>(x)] = (den == 0 ? kInf : (num * inv_mod5(den)) % 5) + 1;
    }
    return Perm::from_images(images);
  };
  // x -> x + 1, x -> 2x, x -> -1/x
  return PermGroup::closure(6, {mobius(1, 1, 0, 1), mobius(2, 0, 0, 1), mobius(0, 4, 1, 0)});
}

GroupHom outer_automorphism_s6() {
  const PermGroup s6 = symmetric_group(6);
  const PermGroup t = pgl2_f5_on_six_points();
  if (t.order() != 120 || !t.is_transitive()) throw VerificationError("outer_automorphism_s6: bad transitive S5");

  // Left cosets xT, labelled in order of their least element.
  std::vector<int> label(s6.order(), -1);
  int next = 0;
  for (std::size_t i = 0; i < s6.order(); ++i) {
    if (label[i] >= 0) continue;
    for (const Perm& u : t.elements()) label[static_cast<std::size_t>(s6.index_of(s6.elements()[i] * u))] = next;
    ++next;
  }
  if (next != 6) throw VerificationError("outer_automorphism_s6: expected 6 cosets");
  std::vector<Perm> reps(6);
  for (std::size_t i = s6.order(); i-- > 0;) reps[static_cast<std::size_t>(label[i])] = s6.elements()[i];

  std::vector<Perm> images;
  for (const Perm& s : s6.generators()) {
    std::vector<int> img(6);
    for (std::size_t c = 0; c < 6; ++c) img[c] = label[static_cast<std::size_t>(s6.index_of(s * reps[c]))] + 1;
    images.push_back(Perm::from_images(img));
  }
  GroupHom phi(s6, 6, images);
  if (!phi.is_injective()) throw VerificationError("outer_automorphism_s6: coset action not faithful");
  return phi;
}

// ---------------------------------------------------------------------------
// Isomorphism testing

namespace {

struct ElementProfile {
  std::size_t order;
  std::size_t class_size;
  friend auto operator<=>(const ElementProfile&, const ElementProfile&) = default;
};

std::vector<ElementProfile> profiles(const PermGroup& g) {
  std::vector<ElementProfile> out(g.order());
  for (const auto& c : conjugacy_classes(g))
    for (const Perm& x : c.elements) out[static_cast<std::size_t>(g.index_of(x))] = {x.order(), c.elements.size()};
  return out;
}

// Generators chosen greedily among elements of largest order first.
std::vector<Perm> small_generating_set(const PermGroup& g, const std::vector<ElementProfile>& prof) {
  std::vector<std::size_t> idx(g.order());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return prof[a].order > prof[b].order; });
  std::vector<Perm> gens;
  PermGroup current(g.degree());
  for (auto i : idx) {
    if (current.order() == g.order()) break;
    if (current.contains(g.elements()[i])) continue;
    gens.push_back(g.elements()[i]);
    current = PermGroup::closure(g.degree(), gens);
  }
  return gens;
}

// Extends gens[k] -> images[k] over <gens>; false on any conflict or collision.
bool extends_injectively(const PermGroup& g, const PermGroup& h, const std::vector<Perm>& gens,
                         const std::vector<Perm>& images) {
  std::unordered_map<std::uint64_t, Perm> map{{g.identity().key(), h.identity()}};
  std::unordered_set<std::uint64_t> used{h.identity().key()};
  std::vector<Perm> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Perm x = queue[head];
    const Perm fx = map.at(x.key());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm y = gens[k] * x;
      Perm fy = images[k] * fx;
      auto it = map.find(y.key());
      if (it == map.end()) {
        if (!used.insert(fy.key()).second) return false;
        map.emplace(y.key(), fy);
        queue.push_back(y);
      } else if (it->second != fy) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<GroupHom> are_isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  const auto pg = profiles(g), ph = profiles(h);
  {
    auto a = pg, b = ph;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::vector<Perm> gens = small_generating_set(g, pg);
  if (gens.empty()) return GroupHom(g, h.degree(), {});

  std::vector<std::vector<Perm>> candidates;
  for (const Perm& s : gens) {
    const ElementProfile want = pg[static_cast<std::size_t>(g.index_of(s))];
    std::vector<Perm> cand;
    for (std::size_t j = 0; j < h.order(); ++j)
      if (ph[j] == want) cand.push_back(h.elements()[j]);
    candidates.push_back(std::move(cand));
  }

  std::vector<Perm> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    for (const Perm& c : candidates[k]) {
      chosen.push_back(c);
      const std::vector<Perm> prefix(gens.begin(), gens.begin() + static_cast<long>(k + 1));
      if (extends_injectively(g, h, prefix, chosen) && search(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  // Re-express on g's own generators so GroupHom can re-verify independently.
  const GroupHom via_search(PermGroup::closure(g.degree(), gens), h.degree(), chosen);
  if (via_search.source() != g) throw VerificationError("are_isomorphic: search generators do not span");
  std::vector<Perm> own_images;
  for (const Perm& s : g.generators()) own_images.push_back(via_search(s));
  GroupHom iso(g, h.degree(), std::move(own_images));
  if (!iso.is_injective() || iso.image() != h) throw VerificationError("are_isomorphic: result is not bijective");
  return iso;
}

std::vector<Perm> classify_homs_c2(const PermGroup& g) {
  std::vector<Perm> out;
  for (const auto& c : conjugacy_classes(g))
    if ((c.representative * c.representative).is_identity()) out.push_back(c.representative);
  return out;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  // Every normal subgroup is a join of normal closures of conjugacy classes.
  std::vector<PermGroup> found{PermGroup(g.degree())};
  auto add = [&](PermGroup n) {
    if (std::find(found.begin(), found.end(), n) != found.end()) return false;
    found.push_back(std::move(n));
    return true;
  };
  for (const auto& c : conjugacy_classes(g)) add(PermGroup::closure(g.degree(), c.elements));
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = found.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Perm> gens = found[i].generators();
        gens.insert(gens.end(), found[j].generators().begin(), found[j].generators().end());
        grew |= add(PermGroup::closure(g.degree(), gens));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return found;
}

}  // namespace segre
