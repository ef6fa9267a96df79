#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coadj/modular.hpp"
#include "coadj/root.hpp"

namespace coadj {

using Integer = boost::multiprecision::cpp_int;

/// A polynomial variable: either y_eta for a positive root eta, or lambda.
/// lambda is the greatest variable; the y's compare by (row, col).
struct Variable {
  bool is_lambda = false;
  Root root;

  static constexpr Variable y(const Root& r) noexcept { return {false, r}; }
  static constexpr Variable y(int row, int col) noexcept { return {false, {row, col}}; }
  static constexpr Variable lambda() noexcept { return {true, {}}; }

  friend constexpr std::strong_ordering operator<=>(const Variable& a, const Variable& b) noexcept {
    if (a.is_lambda != b.is_lambda) return a.is_lambda ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.is_lambda) return std::strong_ordering::equal;
    return a.root <=> b.root;
  }
  friend constexpr bool operator==(const Variable& a, const Variable& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// "lambda", "y74", or "y_10_3" once an index exceeds 9.
std::string to_string(const Variable& v);

/// Product of variables with positive exponents, greatest variable first.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  explicit Monomial(const Variable& v, int exp = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  int degree(const Variable& v) const noexcept;
  int total_degree() const noexcept;

  /// Drops v entirely.
  Monomial without(const Variable& v) const;
  /// Sets the exponent of v (0 removes it).
  Monomial with_exponent(const Variable& v, int exp) const;

  bool divides(const Monomial& other) const noexcept;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Lexicographic order driven by the variable order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

std::string to_string(const Monomial& m);

/// Sparse multivariate polynomial with exact integer coefficients.
/// Terms are kept greatest monomial first; zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Integer, std::greater<>>;

  SparsePoly() = default;
  SparsePoly(long c);  // NOLINT: integers promote implicitly
  SparsePoly(const Integer& c);  // NOLINT
  SparsePoly(const Monomial& m, Integer c = 1);

  static SparsePoly var(const Variable& v) { return SparsePoly(Monomial(v)); }
  static SparsePoly y(int row, int col) { return var(Variable::y(row, col)); }
  static SparsePoly y(const Root& r) { return var(Variable::y(r)); }
  static SparsePoly lambda() { return var(Variable::lambda()); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Integer& coefficient(const Monomial& m) const;

  std::set<Variable> variables() const;
  bool contains(const Variable& v) const;
  int degree(const Variable& v) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  /// Adds c * m * o without materializing the product.
  SparsePoly& add_scaled(const SparsePoly& o, const Integer& c, const Monomial& m = {});

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);

  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

 private:
  void add_term(const Monomial& m, const Integer& c);

  Terms terms_;
};

/// Canonical form: terms greatest-first, e.g. "y74*y41 + y73*y31", "-2*y21^3 + 1", "0".
std::string to_string(const SparsePoly& p);

/// Parses the canonical form (and any other term order). Throws InputError.
SparsePoly parse_poly(std::string_view text);

SparsePoly partial_derivative(const SparsePoly& p, const Variable& v);

/// Coefficients of lambda^0, lambda^1, ... as lambda-free polynomials; trailing
/// zeros trimmed (the zero polynomial gives an empty list).
std::vector<SparsePoly> lambda_coefficients(const SparsePoly& p);

/// q with p == q * d exactly over the integers, if one exists. d must be nonzero.
std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& d);

using Assignment = std::map<Variable, Residue>;

/// Value in Z/prime. Throws InputError if a variable of p is unassigned.
Residue evaluate_mod_p(const SparsePoly& p, const Assignment& at, Residue prime);

/// Matrix of polynomials; absent entries are zero. Indices are 0-based.
class SymbolicMatrix {
 public:
  SymbolicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const SparsePoly& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, SparsePoly p);

  /// Rows and columns kept in the order given.
  SymbolicMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  ModMatrix evaluate_mod_p(const Assignment& at, Residue prime) const;

 private:
  std::size_t rows_, cols_;
  std::map<std::pair<std::size_t, std::size_t>, SparsePoly> entries_;
};

/// Exact determinant by Laplace expansion down the rows, memoized on the set of
/// columns still available. Throws InputError for non-square or > 24 columns.
SparsePoly determinant(const SymbolicMatrix& m);

}  // namespace coadj
