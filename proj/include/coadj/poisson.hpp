#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coadj/ideal.hpp"
#include "coadj/polynomial.hpp"

namespace coadj {

struct SignedRoot {
  int sign = 1;  // +1 or -1
  Root root;

  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

/// {y_a, y_b} in the factor algebra: from [e_ij, e_kl] = d_jk e_il - d_li e_kj,
/// projected to zero when the result lies in the ideal.
/// Throws InputError unless both roots are live.
std::optional<SignedRoot> bracket_basis(const Root& a, const Root& b, const RegularIdeal& ideal);

/// Brackets between all live basis elements, indexed by live-root position
/// (greatest-first). Immutable after construction.
class BracketTable {
 public:
  explicit BracketTable(const RegularIdeal& ideal);

  const RegularIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<Root>& live() const noexcept { return live_; }
  std::size_t dim() const noexcept { return live_.size(); }

  /// Position of a live root; throws InputError for dead roots.
  std::size_t index_of(const Root& r) const;

  struct Entry {
    int sign = 0;  // 0 means the bracket vanishes
    std::size_t target = 0;
  };
  const Entry& entry(std::size_t a, std::size_t b) const { return table_[a * live_.size() + b]; }

 private:
  RegularIdeal ideal_;
  std::vector<Root> live_;
  std::vector<int> position_;  // by (row-1)*n + col-1; -1 when dead
  std::vector<Entry> table_;
};

/// Sum over variable pairs of dp/dy_a * dq/dy_b * {y_a, y_b}.
/// Throws InputError if lambda or a dead variable appears.
SparsePoly poisson_bracket(const SparsePoly& p, const SparsePoly& q, const RegularIdeal& ideal);
SparsePoly poisson_bracket(const SparsePoly& p, const SparsePoly& q, const BracketTable& table);

struct InvarianceResult {
  bool invariant = true;
  std::optional<Root> witness;  // first live root (greatest-first) with a nonzero bracket
  SparsePoly bracket;           // {p, y_witness}
};

/// Exact check that {p, y_eta} vanishes for every live eta.
InvarianceResult is_invariant(const SparsePoly& p, const RegularIdeal& ideal);
InvarianceResult is_invariant(const SparsePoly& p, const BracketTable& table);

struct OracleReport {
  int generic_rank = 0;
  int index_estimate = 0;
  int dim = 0;
  int trials = 0;
  Residue prime = kMersenne61;
  std::uint64_t seed = 0;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

inline constexpr int kDefaultTrials = 5;
inline constexpr std::uint64_t kDefaultSeed = 20080101;

/// Max over trials of the rank of the structure matrix B[a][b] = f({y_a, y_b})
/// at a random point f over Z/prime. Trial i draws from a generator seeded with
/// (seed, i). Requires prime > 2^40 and trials >= 1.
OracleReport generic_rank_oracle(const RegularIdeal& ideal, int trials = kDefaultTrials,
                                 Residue prime = kMersenne61, std::uint64_t seed = kDefaultSeed);

/// Max over trials of the rank of the Jacobian of polys at a random point.
/// Throws InputError if lambda appears.
int jacobian_rank(const std::vector<SparsePoly>& polys, int trials = kDefaultTrials,
                  Residue prime = kMersenne61, std::uint64_t seed = kDefaultSeed);

}  // namespace coadj
