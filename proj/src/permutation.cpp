#include "coadj/permutation.hpp"

#include <numeric>

namespace coadj {

Permutation::Permutation(int n) : one_line_(static_cast<std::size_t>(n)) {
  std::iota(one_line_.begin(), one_line_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw InputError("one-line array is not a permutation of [1, " + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.one_line_ = std::move(one_line);
  return p;
}

Permutation Permutation::reflection(int n, const Root& r) {
  if (!r.fits(n)) throw InputError("reflection " + to_string(r) + " out of range for n=" + std::to_string(n));
  Permutation p(n);
  std::swap(p.one_line_[static_cast<std::size_t>(r.row - 1)], p.one_line_[static_cast<std::size_t>(r.col - 1)]);
  return p;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n()) throw InputError("composing permutations of different sizes");
  Permutation out(u.n());
  for (int x = 1; x <= u.n(); ++x) out.one_line_[static_cast<std::size_t>(x - 1)] = u(v(x));
  return out;
}

Sign root_sign(const Permutation& w, const Root& eta) {
  return w(eta.row) > w(eta.col) ? Sign::Positive : Sign::Negative;
}

long inversions(const Permutation& w) {
  long count = 0;
  const auto& a = w.one_line();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++count;
  return count;
}

Permutation build_w(const RegularIdeal& ideal) {
  const int n = ideal.n();
  std::vector<int> one_line;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int t = 1; t <= n; ++t) {
    // i <= t is never a positive root, so i = t always qualifies if unused.
    int pick = 0;
    for (int i = n; i >= 1; --i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      if (i > t && ideal.contains({i, t})) continue;
      pick = i;
      break;
    }
    used[static_cast<std::size_t>(pick)] = true;
    one_line.push_back(pick);
  }
  return Permutation::from_one_line(std::move(one_line));
}

Permutation reflection_product(int n, std::span<const Root> word) {
  Permutation w(n);
  for (const auto& r : word) w = w * Permutation::reflection(n, r);
  return w;
}

std::vector<Permutation> partial_products(int n, std::span<const Root> word) {
  std::vector<Permutation> out{Permutation(n)};
  for (const auto& r : word) out.push_back(out.back() * Permutation::reflection(n, r));
  return out;
}

Permutation column_prefix_product(const Diagram& d, int t) {
  if (t < 0 || t > d.n()) throw InputError("column " + std::to_string(t) + " out of range");
  std::vector<Root> prefix;
  for (const auto& xi : d.crosses())
    if (xi.col <= t) prefix.push_back(xi);
  return reflection_product(d.n(), prefix);
}

SignProfile sign_profile(const Diagram& d, const Root& eta) {
  require_positive(eta, d.n());
  const int t = eta.col;
  return {root_sign(column_prefix_product(d, t - 1), eta), root_sign(column_prefix_product(d, t), eta)};
}

SignClass classify_by_signs(const Diagram& d, const Root& eta) {
  const auto [before, after] = sign_profile(d, eta);
  if (before == Sign::Negative) return after == Sign::Negative ? SignClass::Minus : SignClass::Inconsistent;
  return after == Sign::Positive ? SignClass::Bullet : SignClass::PlusOrCross;
}

SignClass classify_by_signs(const RegularIdeal& ideal, const Root& eta) {
  return classify_by_signs(Diagram(ideal), eta);
}

SignClass symbol_class(Symbol s) {
  switch (s) {
    case Symbol::Minus: return SignClass::Minus;
    case Symbol::Bullet: return SignClass::Bullet;
    case Symbol::Plus:
    case Symbol::Cross: return SignClass::PlusOrCross;
    case Symbol::Empty: break;
  }
  return SignClass::Inconsistent;
}

}  // namespace coadj
