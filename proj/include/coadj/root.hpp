#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coadj {

/// Raised for malformed or out-of-range user input (roots, ideals, matrices).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pair (row, col) of distinct 1-based indices. Positive when row > col,
/// i.e. a position strictly below the diagonal of an n x n matrix.
struct Root {
  int row = 0;
  int col = 0;

  constexpr bool positive() const noexcept { return row > col; }
  constexpr Root negated() const noexcept { return {col, row}; }
  constexpr bool fits(int n) const noexcept {
    return row >= 1 && col >= 1 && row <= n && col <= n && row != col;
  }

  // Lexicographic on (row, col); this is the variable order used by polynomials,
  // not the diagram order.
  friend constexpr auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

/// The diagram order on positive roots: a precedes b ("a is greater") when a
/// sits in an earlier column, or in the same column with a larger row.
/// (n,1) is the greatest root, (n,n-1) the least.
constexpr bool succeeds(const Root& a, const Root& b) noexcept {
  return a.col < b.col || (a.col == b.col && a.row > b.row);
}

/// Comparator sorting roots greatest-first under the diagram order.
struct DiagramOrder {
  constexpr bool operator()(const Root& a, const Root& b) const noexcept { return succeeds(a, b); }
};

/// (i,j) + (j,m) = (i,m); undefined otherwise.
constexpr std::optional<Root> root_sum(const Root& a, const Root& b) noexcept {
  if (a.col != b.row) return std::nullopt;
  return Root{a.row, b.col};
}

/// All positive roots of size n, greatest-first under the diagram order
/// (column-major, rows descending within a column).
std::vector<Root> positive_roots(int n);

constexpr int num_positive_roots(int n) noexcept { return n * (n - 1) / 2; }

/// Throws InputError unless r is a positive root with indices in [1, n].
void require_positive(const Root& r, int n);

}  // namespace coadj
