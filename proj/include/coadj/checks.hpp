#pragma once

#include <string>
#include <vector>

#include "coadj/diagram.hpp"

namespace coadj {

/// Outcome of one executable structural property; detail names the first
/// failure and is empty on success.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

// Diagram bookkeeping: the symbols partition the positive roots, the crosses
// decrease, every "+" at (a,t) pairs with a "-" at (k,a) for its cross (k,t),
// and each step removes exactly what it placed.
CheckResult check_diagram_structure(const Diagram& d);

// A_i = B_i + M is closed under root addition after every step i >= 0.
CheckResult check_step_subalgebras(const Diagram& d);

// D_i^- is closed under root addition for every step.
CheckResult check_minus_subalgebras(const Diagram& d);

// Weaker form: sums of two D_i^- roots that still lie below xi_i are in D_i^-.
CheckResult check_minus_subalgebras_below_cross(const Diagram& d);

// Inversion count of the greedy permutation equals dim.
CheckResult check_length_equals_dim(const Diagram& d);

// The greedy permutation is the product of the reflections at the crosses,
// and w^[t] equals the partial product ending at the last cross of column t.
CheckResult check_reflection_factorization(const Diagram& d);

// For each step i and eta below xi_i: eta in B_i gives w_j(eta) > 0 for all
// j <= i, eta in D_i^- or D_i^+ gives w_i(eta) < 0, and the live roots below
// xi_i split as B_i, D_i^-, D_i^+.
CheckResult check_step_signs(const Diagram& d);

// In column t, with a = last live row (t if none): rows above a are negative
// under w^[t], rows below a positive.
CheckResult check_column_signs(const Diagram& d);

// Signs of w^[t-1], w^[t] reproduce every symbol (plus and cross merged) and
// never land in two classes at once.
CheckResult check_sign_classification(const Diagram& d);

// |I| == |J| for every cross, and w_xi(t) == k in case 1.
CheckResult check_index_sets(const Diagram& d);

// dim - index is even.
CheckResult check_orbit_parity(const Diagram& d);

/// Every check above, in a fixed order.
std::vector<CheckResult> theorem_checks(const Diagram& d);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace coadj
