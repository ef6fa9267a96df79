#pragma once
// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "coadj/polynomial.hpp"
#include "coadj/root.hpp"

namespace oracle {

using coadj::Root;

inline std::vector<Root> all_positive(int n) {
  std::vector<Root> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) out.push_back({i, j});
  return out;
}

/// Literal closure rule: any defined sum with a summand in S must be in S.
inline bool closed(const std::set<Root>& s, int n) {
  const auto all = all_positive(n);
  for (const auto& a : all)
    for (const auto& b : all)
      if (a.col == b.row && (s.count(a) || s.count(b)) && !s.count(Root{a.row, b.col})) return false;
  return true;
}

/// Fixpoint iteration of the closure rule.
inline std::set<Root> closure_fixpoint(std::set<Root> s, int n) {
  const auto all = all_positive(n);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& a : all)
      for (const auto& b : all)
        if (a.col == b.row && (s.count(a) || s.count(b)) && s.insert(Root{a.row, b.col}).second) grew = true;
  }
  return s;
}

/// Number of closed subsets, by filtering all 2^|positive roots| subsets.
inline int count_closed_subsets(int n) {
  const auto all = all_positive(n);
  int count = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::set<Root> s;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask & (1u << k)) s.insert(all[k]);
    count += closed(s, n);
  }
  return count;
}

inline std::set<Root> random_subset(std::mt19937& rng, int n, double density) {
  std::bernoulli_distribution pick(density);
  std::set<Root> s;
  for (const auto& r : all_positive(n))
    if (pick(rng)) s.insert(r);
  return s;
}

/// Leibniz expansion over all k! permutations.
inline coadj::SparsePoly leibniz_det(const coadj::SymbolicMatrix& m) {
  const std::size_t k = m.rows();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  coadj::SparsePoly total;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) inv += perm[i] > perm[j];
    coadj::SparsePoly term(1);
    for (std::size_t i = 0; i < k && !term.is_zero(); ++i) term = term * m.at(i, perm[i]);
    if (inv % 2)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace oracle
