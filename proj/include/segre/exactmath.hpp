#pragma once

// Exact rational linear algebra and sparse multivariate polynomials over Q.
// Nothing in this header touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace segre {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps every value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);  // "n" or "n/d"

/// A point of projective space with exact coordinates.
///
/// The stored coordinates are always the canonical representative: coprime
/// integers whose first nonzero entry is positive. Equality and ordering are
/// defined on that representative, so (2:2:-2) == (1:1:-1).
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<Rational> coords);
  ProjPoint(std::initializer_list<long> coords);

  std::size_t ambient_size() const { return coords_.size(); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Coordinates as machine integers; throws if any does not fit.
  std::vector<long> integer_coords() const;
  std::string to_string() const;  // "(1:1:1:-1:-1:-1)"

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

ProjPoint canonical(const ProjPoint& p);

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row-echelon form; zero rows are dropped.
Matrix rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0} for a matrix with `cols` columns.
Matrix null_space(const Matrix& m, std::size_t cols);

/// A projective linear subspace, stored as the RREF of a spanning matrix.
/// The empty subspace has no rows and projective dimension -1.
class LinearSubspace {
 public:
  LinearSubspace(std::size_t ambient_size, const std::vector<ProjPoint>& spanning);
  static LinearSubspace from_rows(std::size_t ambient_size, Matrix rows);
  /// Solution set of the homogeneous linear equations given as coefficient rows.
  static LinearSubspace solution_set(std::size_t ambient_size, const Matrix& equations);

  std::size_t ambient_size() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()) - 1; }
  const Matrix& basis_matrix() const { return basis_; }
  std::vector<ProjPoint> basis() const;

  bool contains(const ProjPoint& p) const;
  bool contains(const LinearSubspace& other) const;

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;
  friend auto operator<=>(const LinearSubspace& a, const LinearSubspace& b) {
    return a.basis_ <=> b.basis_;
  }

 private:
  LinearSubspace(std::size_t ambient_size, Matrix canonical_rows);
  std::size_t ambient_;
  Matrix basis_;
};

bool subspace_contains(const LinearSubspace& s, const ProjPoint& p);
LinearSubspace subspace_intersection(const LinearSubspace& s, const LinearSubspace& t);

using Exponents = std::vector<std::uint8_t>;

/// Sparse polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored, so structural equality is ring equality.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t num_vars = 0) : nvars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(const Rational& c, Exponents exps);
  /// x_0^d + ... + x_{n-1}^d
  static MultiPoly power_sum(std::size_t num_vars, unsigned degree);
  /// Linear form with the given coefficients.
  static MultiPoly linear(const std::vector<Rational>& coeffs);

  std::size_t num_vars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  Rational coefficient(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const { return *this * Rational(-1); }
  MultiPoly pow(unsigned k) const;

  MultiPoly derivative(std::size_t var) const;
  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const Exponents& e, const Rational& c);
  void check_arity(const MultiPoly& o) const;

  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

/// Exact value at the stored (canonical) representative of `pt`.
Rational poly_eval(const MultiPoly& p, const ProjPoint& pt);
Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& values);

/// Replace x_i by images[i]; every image must be a homogeneous linear form.
MultiPoly poly_substitute_linear(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// True iff p - q is the zero polynomial. Different arities compare unequal.
bool verify_identity(const MultiPoly& p, const MultiPoly& q);

/// Rank of the Jacobian matrix of `system` at `pt`. Throws std::domain_error
/// if `pt` does not satisfy every equation.
std::size_t jacobian_rank(const std::vector<MultiPoly>& system, const ProjPoint& pt);

}  // namespace segre
