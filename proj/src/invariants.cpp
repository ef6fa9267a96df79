#include "coadj/invariants.hpp"

#include <algorithm>

namespace coadj {

SymbolicMatrix characteristic_matrix(const RegularIdeal& ideal) {
  const int n = ideal.n();
  SymbolicMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1), -SparsePoly::lambda());
    for (int j = 1; j < i; ++j)
      if (!ideal.contains({i, j})) m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), SparsePoly::y(i, j));
  }
  return m;
}

IndexSets index_sets(const Diagram& d, const Root& xi) {
  const auto crosses = d.crosses();
  const auto it = std::find(crosses.begin(), crosses.end(), xi);
  if (it == crosses.end()) throw InputError(to_string(xi) + " is not a cross of the diagram");
  const std::vector<Root> word(crosses.begin(), it + 1);

  IndexSets out;
  out.w_xi = reflection_product(d.n(), word);
  const Permutation& w = out.w_xi;
  const int t = xi.col;
  const int pivot = w(t);

  for (int j = 1; j <= t; ++j)
    if (w(j) >= pivot) out.J.push_back(j);

  if (pivot > t) {
    out.case_tag = 1;
    for (int j : out.J) out.I.push_back(w(j));
  } else {
    out.case_tag = 2;
    for (int i = pivot; i <= t; ++i) out.I.push_back(i);
    for (int i = t + 1; i <= d.n(); ++i)
      if (w(i) < pivot) out.I.push_back(i);
  }
  std::sort(out.I.begin(), out.I.end());
  return out;
}

InvariantCandidate candidate(const Diagram& d, const Root& xi) {
  const IndexSets sets = index_sets(d, xi);
  InvariantCandidate c;
  c.xi = xi;
  c.case_tag = sets.case_tag;
  c.J = sets.J;
  c.I = sets.I;
  if (c.I.size() != c.J.size()) {
    c.anomaly = "row and column systems differ in size";
    return c;
  }
  std::vector<std::size_t> rows, cols;
  for (int i : c.I) rows.push_back(static_cast<std::size_t>(i - 1));
  for (int j : c.J) cols.push_back(static_cast<std::size_t>(j - 1));
  c.minor = determinant(characteristic_matrix(d.ideal()).submatrix(rows, cols));
  const auto coeffs = lambda_coefficients(c.minor);
  if (coeffs.empty()) {
    c.anomaly = "minor vanishes identically";
    return c;
  }
  c.lambda_degree = static_cast<int>(coeffs.size()) - 1;
  c.p = coeffs.back();
  return c;
}

std::vector<InvariantCandidate> all_candidates(const Diagram& d) {
  std::vector<InvariantCandidate> out;
  for (const auto& xi : d.crosses()) out.push_back(candidate(d, xi));
  return out;
}

std::optional<ReducedCandidate> reduce_by_earlier(const std::vector<InvariantCandidate>& candidates,
                                                  std::size_t index) {
  if (index >= candidates.size()) throw InputError("candidate index out of range");
  ReducedCandidate r;
  r.quotient = candidates[index].p;
  if (r.quotient.is_zero()) return std::nullopt;
  for (std::size_t j = 0; j < index; ++j) {
    const SparsePoly& divisor = candidates[j].p;
    // Constants would divide anything; only genuine polynomial factors count.
    if (divisor.is_zero() || divisor.variables().empty()) continue;
    while (auto q = divide_exact(r.quotient, divisor)) {
      r.quotient = std::move(*q);
      r.divisors.push_back(candidates[j].xi);
    }
  }
  if (r.divisors.empty()) return std::nullopt;
  return r;
}

}  // namespace coadj
