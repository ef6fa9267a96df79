#pragma once

#include <optional>
#include <vector>

#include "coadj/diagram.hpp"
#include "coadj/permutation.hpp"
#include "coadj/polynomial.hpp"

namespace coadj {

/// n x n matrix with y_ij at every live position (i, j), zero at ideal and
/// upper positions, and -lambda on the diagonal.
SymbolicMatrix characteristic_matrix(const RegularIdeal& ideal);

/// Row/column index systems for the minor attached to a cross.
struct IndexSets {
  int case_tag = 0;   // 1 when w_xi(t) > t, otherwise 2
  std::vector<int> J; // columns, ascending, 1-based
  std::vector<int> I; // rows, ascending, 1-based
  Permutation w_xi;   // r_{xi_1} ... r_{xi_m}
};

/// For the m-th cross xi = (k, t), with w_xi the m-th partial product:
///   J = { j <= t : w_xi(j) >= w_xi(t) }
///   case 1 (w_xi(t) > t): I = w_xi(J)
///   case 2 (w_xi(t) <= t): I = [w_xi(t), t] together with { i > t : w_xi(i) < w_xi(t) }
/// Throws InputError when xi is not a cross of the diagram.
IndexSets index_sets(const Diagram& d, const Root& xi);

struct InvariantCandidate {
  Root xi;
  int case_tag = 0;
  std::vector<int> J;
  std::vector<int> I;
  SparsePoly minor;       // det of the characteristic matrix on rows I, columns J
  SparsePoly p;           // nonzero lambda-coefficient of highest degree
  int lambda_degree = -1; // -1 when the minor vanishes or the sets are unbalanced
  /// Set when no polynomial can be extracted: unequal |I|, |J| or a zero minor.
  std::optional<std::string> anomaly;
};

InvariantCandidate candidate(const Diagram& d, const Root& xi);

/// One candidate per cross, greatest cross first.
std::vector<InvariantCandidate> all_candidates(const Diagram& d);

/// p with every exact factor of an earlier candidate divided out.
struct ReducedCandidate {
  std::vector<Root> divisors;  // crosses whose P divided out, once per division
  SparsePoly quotient;
};

/// Repeatedly divides candidates[index].p by the P of each earlier non-constant
/// candidate while the division is exact. Returns nothing when no division applies.
std::optional<ReducedCandidate> reduce_by_earlier(const std::vector<InvariantCandidate>& candidates,
                                                  std::size_t index);

}  // namespace coadj
