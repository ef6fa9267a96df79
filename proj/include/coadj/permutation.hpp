#pragma once

#include <span>
#include <vector>

#include "coadj/diagram.hpp"

namespace coadj {

/// A bijection of [1, n] stored in one-line form: entry t-1 holds w(t).
class Permutation {
 public:
  explicit Permutation(int n = 0);  // identity
  /// Throws InputError unless one_line is a bijection of [1, n].
  static Permutation from_one_line(std::vector<int> one_line);
  /// The reflection r_(k,t): swaps k and t.
  static Permutation reflection(int n, const Root& r);

  int n() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int x) const { return one_line_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  /// Image w(i, j) = (w(i), w(j)).
  Root apply(const Root& r) const { return {(*this)(r.row), (*this)(r.col)}; }

  /// (u * v)(x) = u(v(x)): the right factor acts first.
  friend Permutation operator*(const Permutation& u, const Permutation& v);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

enum class Sign { Negative = -1, Positive = 1 };

/// Sign of the image root w(eta).
Sign root_sign(const Permutation& w, const Root& eta);

/// Number of pairs t < k with w(t) > w(k); equals the Coxeter length.
long inversions(const Permutation& w);

/// The greedy permutation of the ideal: w(t) is the largest i not yet used with
/// (i, t) outside the ideal.
Permutation build_w(const RegularIdeal& ideal);

/// r_{xi_1} r_{xi_2} ... r_{xi_s}, rightmost factor applied first.
Permutation reflection_product(int n, std::span<const Root> word);

/// w_0 = identity, w_1, ..., w_s for the prefixes of word.
std::vector<Permutation> partial_products(int n, std::span<const Root> word);

/// w^[t]: product of the reflections at crosses in columns 1..t, in diagram order.
/// t = 0 gives the identity.
Permutation column_prefix_product(const Diagram& d, int t);

/// Outcome of reading the symbol at (b, t) off the signs of w^[t-1] and w^[t].
enum class SignClass { Minus, Bullet, PlusOrCross, Inconsistent };

struct SignProfile {
  Sign before;  // under w^[t-1]
  Sign after;   // under w^[t]
};

SignProfile sign_profile(const Diagram& d, const Root& eta);

/// Minus when w^[t-1](eta) < 0, Bullet when w^[t](eta) > 0, PlusOrCross when
/// the sign flips from positive to negative. A negative-to-positive flip
/// satisfies two of the criteria at once and is reported as Inconsistent.
SignClass classify_by_signs(const Diagram& d, const Root& eta);
SignClass classify_by_signs(const RegularIdeal& ideal, const Root& eta);

/// The class the diagram itself assigns (Plus and Cross merged).
SignClass symbol_class(Symbol s);

}  // namespace coadj
