#include "coadj/ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coadj {

RegularIdeal::RegularIdeal(int n) : n_(n) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  thresholds_.assign(static_cast<std::size_t>(n - 1), n + 1);
}

RegularIdeal RegularIdeal::from_thresholds(int n, std::vector<int> thresholds) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  if (static_cast<int>(thresholds.size()) != n - 1)
    throw InputError("expected " + std::to_string(n - 1) + " column thresholds");
  for (int j = 1; j < n; ++j) {
    const int c = thresholds[static_cast<std::size_t>(j - 1)];
    if (c < j + 1 || c > n + 1)
      throw InputError("threshold of column " + std::to_string(j) + " out of range");
    if (j > 1 && c < thresholds[static_cast<std::size_t>(j - 2)])
      throw InputError("thresholds must be non-decreasing");
  }
  return RegularIdeal(n, std::move(thresholds));
}

RegularIdeal RegularIdeal::from_roots(int n, std::span<const Root> roots) {
  auto violations = closure_violations(roots, n);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "not a regular ideal; missing sums:";
    for (const auto& v : violations)
      msg << ' ' << to_string(v.sum) << '=' << to_string(v.lhs) << '+' << to_string(v.rhs);
    throw IdealError(msg.str(), std::move(violations));
  }
  return closure(roots, n);
}

int RegularIdeal::threshold(int col) const noexcept {
  if (col < 1 || col >= n_) return n_ + 1;
  return thresholds_[static_cast<std::size_t>(col - 1)];
}

bool RegularIdeal::contains(const Root& r) const noexcept {
  if (!r.positive() || !r.fits(n_)) return false;
  return r.row >= threshold(r.col);
}

std::vector<Root> RegularIdeal::roots() const {
  std::vector<Root> out;
  for (const auto& r : positive_roots(n_))
    if (contains(r)) out.push_back(r);
  return out;
}

std::vector<Root> RegularIdeal::live_roots() const {
  std::vector<Root> out;
  for (const auto& r : positive_roots(n_))
    if (!contains(r)) out.push_back(r);
  return out;
}

int RegularIdeal::size() const noexcept {
  int total = 0;
  for (int j = 1; j < n_; ++j) total += n_ + 1 - threshold(j);
  return total;
}

std::vector<ClosureViolation> closure_violations(std::span<const Root> roots, int n) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  std::set<Root> members;
  for (const auto& r : roots) {
    require_positive(r, n);
    members.insert(r);
  }
  std::vector<ClosureViolation> out;
  const auto all = positive_roots(n);
  for (const auto& a : all)
    for (const auto& b : all) {
      const auto s = root_sum(a, b);
      if (!s) continue;
      if ((members.count(a) || members.count(b)) && !members.count(*s)) out.push_back({a, b, *s});
    }
  std::stable_sort(out.begin(), out.end(), [](const ClosureViolation& x, const ClosureViolation& y) {
    return succeeds(x.sum, y.sum);
  });
  return out;
}

bool is_regular(std::span<const Root> roots, int n) { return closure_violations(roots, n).empty(); }

RegularIdeal closure(std::span<const Root> seed, int n) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  std::vector<int> lowest(static_cast<std::size_t>(n + 1), n + 1);
  for (const auto& r : seed) {
    require_positive(r, n);
    auto& slot = lowest[static_cast<std::size_t>(r.col)];
    slot = std::min(slot, r.row);
  }
  // Column j must start no lower than any column to its right.
  std::vector<int> thresholds(static_cast<std::size_t>(std::max(n - 1, 0)));
  int running = n + 1;
  for (int j = n - 1; j >= 1; --j) {
    running = std::min(running, lowest[static_cast<std::size_t>(j)]);
    thresholds[static_cast<std::size_t>(j - 1)] = running;
  }
  return RegularIdeal::from_thresholds(n, std::move(thresholds));
}

void for_each_regular_ideal(int n, const std::function<void(const RegularIdeal&)>& f) {
  if (n < 1) throw InputError("matrix size must be at least 1");
  std::vector<int> thresholds(static_cast<std::size_t>(n - 1));
  // Depth-first over c_j in [max(j+1, c_{j-1}), n+1].
  std::function<void(int, int)> rec = [&](int j, int floor) {
    if (j == n) {
      f(RegularIdeal::from_thresholds(n, thresholds));
      return;
    }
    for (int c = std::max(j + 1, floor); c <= n + 1; ++c) {
      thresholds[static_cast<std::size_t>(j - 1)] = c;
      rec(j + 1, c);
    }
  };
  rec(1, 2);
}

std::vector<RegularIdeal> enumerate_regular_ideals(int n) {
  std::vector<RegularIdeal> out;
  for_each_regular_ideal(n, [&](const RegularIdeal& m) { out.push_back(m); });
  return out;
}

}  // namespace coadj
