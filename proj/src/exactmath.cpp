#include "segre/exactmath.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace segre {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

// ---------------------------------------------------------------------------
// ProjPoint

namespace {

std::vector<Rational> canonical_coords(std::vector<Rational> c) {
  Integer den_lcm = 1;
  for (const auto& x : c) den_lcm = mp::lcm(den_lcm, Integer(mp::denominator(x)));
  Integer num_gcd = 0;
  for (const auto& x : c) {
    Integer n = mp::numerator(x) * (den_lcm / mp::denominator(x));
    num_gcd = mp::gcd(num_gcd, n);
  }
  if (num_gcd == 0) throw std::invalid_argument("ProjPoint: all coordinates are zero");
  auto first = std::find_if(c.begin(), c.end(), [](const Rational& x) { return x != 0; });
  if (*first < 0) num_gcd = -num_gcd;
  const Rational scale = Rational(den_lcm) / Rational(num_gcd);
  for (auto& x : c) x *= scale;
  return c;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(canonical_coords(std::move(coords))) {}

ProjPoint::ProjPoint(std::initializer_list<long> coords)
    : ProjPoint(std::vector<Rational>(coords.begin(), coords.end())) {}

std::vector<long> ProjPoint::integer_coords() const {
  std::vector<long> out;
  out.reserve(coords_.size());
  for (const auto& x : coords_) out.push_back(mp::numerator(x).convert_to<long>());
  return out;
}

std::string ProjPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ':';
    s += segre::to_string(coords_[i]);
  }
  return s + ")";
}

ProjPoint canonical(const ProjPoint& p) { return ProjPoint(p.coords()); }

// ---------------------------------------------------------------------------
// Row reduction

Matrix rref(Matrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

std::size_t rank(const Matrix& m) { return rref(m).size(); }

Matrix null_space(const Matrix& m, std::size_t cols) {
  const Matrix r = rref(m);
  std::vector<std::size_t> pivots;
  for (const auto& row : r) {
    auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    pivots.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// LinearSubspace

LinearSubspace::LinearSubspace(std::size_t ambient_size, Matrix canonical_rows)
    : ambient_(ambient_size), basis_(std::move(canonical_rows)) {}

LinearSubspace::LinearSubspace(std::size_t ambient_size, const std::vector<ProjPoint>& spanning)
    : ambient_(ambient_size) {
  Matrix rows;
  for (const auto& p : spanning) {
    if (p.ambient_size() != ambient_size) throw std::invalid_argument("LinearSubspace: ambient mismatch");
    rows.push_back(p.coords());
  }
  basis_ = rref(std::move(rows));
}

LinearSubspace LinearSubspace::from_rows(std::size_t ambient_size, Matrix rows) {
  for (const auto& r : rows)
    if (r.size() != ambient_size) throw std::invalid_argument("LinearSubspace: ambient mismatch");
  return LinearSubspace(ambient_size, rref(std::move(rows)));
}

LinearSubspace LinearSubspace::solution_set(std::size_t ambient_size, const Matrix& equations) {
  for (const auto& r : equations)
    if (r.size() != ambient_size) throw std::invalid_argument("LinearSubspace: ambient mismatch");
  return LinearSubspace(ambient_size, rref(null_space(equations, ambient_size)));
}

std::vector<ProjPoint> LinearSubspace::basis() const {
  std::vector<ProjPoint> out;
  for (const auto& row : basis_) out.emplace_back(row);
  return out;
}

bool LinearSubspace::contains(const ProjPoint& p) const {
  if (p.ambient_size() != ambient_) throw std::invalid_argument("subspace_contains: ambient mismatch");
  Matrix m = basis_;
  m.push_back(p.coords());
  return rank(m) == basis_.size();
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace_contains: ambient mismatch");
  Matrix m = basis_;
  m.insert(m.end(), other.basis_.begin(), other.basis_.end());
  return rank(m) == basis_.size();
}

bool subspace_contains(const LinearSubspace& s, const ProjPoint& p) { return s.contains(p); }

LinearSubspace subspace_intersection(const LinearSubspace& s, const LinearSubspace& t) {
  if (s.ambient_size() != t.ambient_size())
    throw std::invalid_argument("subspace_intersection: ambient mismatch");
  const std::size_t n = s.ambient_size();
  // Row space of A is the annihilator of null(A); intersect by stacking annihilators.
  Matrix eqs = null_space(s.basis_matrix(), n);
  const Matrix more = null_space(t.basis_matrix(), n);
  eqs.insert(eqs.end(), more.begin(), more.end());
  return LinearSubspace::solution_set(n, eqs);
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(num_vars, 0);
  e[index] = 1;
  return monomial(1, std::move(e));
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents exps) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::power_sum(std::size_t num_vars, unsigned degree) {
  MultiPoly p(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) {
    Exponents e(num_vars, 0);
    e[i] = static_cast<std::uint8_t>(degree);
    p.add_term(e, 1);
  }
  return p;
}

MultiPoly MultiPoly::linear(const std::vector<Rational>& coeffs) {
  MultiPoly p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& o) const {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
  });
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(e[i] + eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly out = constant(nvars_, 1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("MultiPoly::derivative: index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d(e);
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    if (mag != 1 || unit) os << segre::to_string(mag) << (unit ? "" : "*");
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << int(e[i]);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& values) {
  if (values.size() != p.num_vars()) throw std::invalid_argument("poly_eval: dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
    sum += term;
  }
  return sum;
}

Rational poly_eval(const MultiPoly& p, const ProjPoint& pt) { return poly_eval(p, pt.coords()); }

MultiPoly poly_substitute_linear(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (images.size() != p.num_vars()) throw std::invalid_argument("poly_substitute_linear: arity mismatch");
  if (images.empty()) return p;
  const std::size_t target_vars = images.front().num_vars();
  for (const auto& img : images) {
    if (img.num_vars() != target_vars)
      throw std::invalid_argument("poly_substitute_linear: images disagree on variable count");
    if (!img.is_zero() && (img.degree() != 1 || !img.is_homogeneous()))
      throw std::invalid_argument("poly_substitute_linear: image is not a homogeneous linear form");
  }
  MultiPoly out(target_vars);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

bool verify_identity(const MultiPoly& p, const MultiPoly& q) {
  if (p.num_vars() != q.num_vars()) return false;
  return (p - q).is_zero();
}

std::size_t jacobian_rank(const std::vector<MultiPoly>& system, const ProjPoint& pt) {
  Matrix jac;
  for (const auto& f : system) {
    if (poly_eval(f, pt) != 0)
      throw std::domain_error("jacobian_rank: point " + pt.to_string() + " is not on the variety");
    std::vector<Rational> row;
    for (std::size_t i = 0; i < f.num_vars(); ++i) row.push_back(poly_eval(f.derivative(i), pt));
    jac.push_back(std::move(row));
  }
  return rank(jac);
}

}  // namespace segre
