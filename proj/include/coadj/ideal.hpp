#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "coadj/root.hpp"

namespace coadj {

/// A missing sum: lhs + rhs is defined, one summand is in the set, the sum is not.
struct ClosureViolation {
  Root lhs;
  Root rhs;
  Root sum;
};

/// A set M of positive roots closed under "a summand in M puts the sum in M".
///
/// Such sets are exactly the staircases: column j holds the rows
/// threshold(j) .. n, with thresholds non-decreasing left to right. A threshold
/// of n+1 encodes an empty column. Immutable once built.
class RegularIdeal {
 public:
  /// Empty ideal of size n.
  explicit RegularIdeal(int n = 1);

  /// Validates column thresholds c_1..c_{n-1} (each in [j+1, n+1], non-decreasing).
  static RegularIdeal from_thresholds(int n, std::vector<int> thresholds);

  /// Strict construction from a root set. Throws IdealError listing every
  /// missing sum when the set is not closed.
  static RegularIdeal from_roots(int n, std::span<const Root> roots);

  int n() const noexcept { return n_; }
  const std::vector<int>& thresholds() const noexcept { return thresholds_; }
  /// Threshold of column col (1-based); n+1 for col >= n.
  int threshold(int col) const noexcept;

  bool contains(const Root& r) const noexcept;
  /// Positive root not in the ideal.
  bool live(const Root& r) const noexcept { return r.positive() && r.fits(n_) && !contains(r); }

  /// Members, greatest-first under the diagram order.
  std::vector<Root> roots() const;
  /// Positive roots outside the ideal, greatest-first.
  std::vector<Root> live_roots() const;

  int size() const noexcept;
  /// Dimension of the factor algebra: number of live roots.
  int dim() const noexcept { return num_positive_roots(n_) - size(); }

  friend bool operator==(const RegularIdeal&, const RegularIdeal&) = default;
  friend auto operator<=>(const RegularIdeal& a, const RegularIdeal& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.thresholds_ <=> b.thresholds_;
  }

 private:
  RegularIdeal(int n, std::vector<int> thresholds) : n_(n), thresholds_(std::move(thresholds)) {}

  int n_;
  std::vector<int> thresholds_;
};

class IdealError : public InputError {
 public:
  IdealError(const std::string& what, std::vector<ClosureViolation> violations)
      : InputError(what), violations_(std::move(violations)) {}
  const std::vector<ClosureViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<ClosureViolation> violations_;
};

/// Every missing sum for the set, in the order (sum greatest-first, then lhs).
/// Throws InputError on roots that are not positive or exceed n.
std::vector<ClosureViolation> closure_violations(std::span<const Root> roots, int n);

bool is_regular(std::span<const Root> roots, int n);

/// Smallest regular ideal containing seed.
RegularIdeal closure(std::span<const Root> seed, int n);

/// Calls f once per regular ideal of size n (thresholds in lexicographic order).
void for_each_regular_ideal(int n, const std::function<void(const RegularIdeal&)>& f);

std::vector<RegularIdeal> enumerate_regular_ideals(int n);

}  // namespace coadj
