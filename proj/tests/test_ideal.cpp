#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coadj/ideal.hpp"
#include "oracles.hpp"

using namespace coadj;

namespace {

std::set<Root> as_set(const std::vector<Root>& v) { return {v.begin(), v.end()}; }

const std::vector<Root> kExampleIdeal{{5, 1}, {6, 1}, {7, 1}, {7, 2}};

}  // namespace

TEST_CASE("root addition") {
  CHECK(root_sum({7, 4}, {4, 1}) == Root{7, 1});
  CHECK(root_sum({3, 2}, {2, 1}) == Root{3, 1});
  CHECK_FALSE(root_sum({5, 2}, {4, 1}).has_value());
}

TEST_CASE("diagram order is a strict total order, column-major with rows descending") {
  for (int n = 1; n <= 6; ++n) {
    const auto roots = positive_roots(n);
    CHECK(static_cast<int>(roots.size()) == num_positive_roots(n));
    for (const auto& a : roots) {
      CHECK_FALSE(succeeds(a, a));
      for (const auto& b : roots)
        if (a != b) CHECK(succeeds(a, b) != succeeds(b, a));
    }
    auto sorted = oracle::all_positive(n);
    std::sort(sorted.begin(), sorted.end(), DiagramOrder{});
    CHECK(sorted == roots);
  }
  const auto r7 = positive_roots(7);
  CHECK(r7.front() == Root{7, 1});
  CHECK(r7.back() == Root{7, 6});
}

TEST_CASE("regularity examples") {
  CHECK(is_regular(kExampleIdeal, 7));
  CHECK(is_regular(std::vector<Root>{}, 3));
  CHECK(is_regular(std::vector<Root>{}, 1));

  const std::vector<Root> printed{{5, 1}, {6, 1}, {7, 1}, {6, 2}};
  CHECK_FALSE(is_regular(printed, 7));

  const std::vector<Root> lone{{6, 2}};
  const auto v = closure_violations(lone, 7);
  std::set<Root> missing;
  for (const auto& x : v) missing.insert(x.sum);
  CHECK(missing == std::set<Root>{{6, 1}, {7, 2}});
}

TEST_CASE("strict construction reports missing sums") {
  const std::vector<Root> lone{{6, 2}};
  try {
    RegularIdeal::from_roots(7, lone);
    FAIL("expected IdealError");
  } catch (const IdealError& e) {
    CHECK(std::string(e.what()).find("(7,2)") != std::string::npos);
    CHECK(e.violations().size() >= 2);
  }
}

TEST_CASE("input errors") {
  const std::vector<Root> bad{{8, 1}};
  CHECK_THROWS_AS(is_regular(bad, 7), InputError);
  const std::vector<Root> negative{{1, 3}};
  CHECK_THROWS_AS(closure(negative, 4), InputError);
  CHECK_THROWS_AS(RegularIdeal::from_thresholds(4, {3, 2, 5}), InputError);
  CHECK_THROWS_AS(RegularIdeal::from_thresholds(4, {1, 4, 5}), InputError);
  CHECK_THROWS_AS(RegularIdeal(0), InputError);
}

TEST_CASE("closure examples") {
  const std::vector<Root> seed{{5, 1}};
  CHECK(as_set(closure(seed, 7).roots()) == std::set<Root>{{5, 1}, {6, 1}, {7, 1}});
  CHECK(closure(std::vector<Root>{}, 5).roots().empty());
  const std::vector<Root> seed43{{4, 3}};
  CHECK(as_set(closure(seed43, 5).roots()) == std::set<Root>{{4, 3}, {5, 3}, {4, 2}, {5, 2}, {4, 1}, {5, 1}});
}

TEST_CASE("membership and dimension follow thresholds") {
  const auto m = RegularIdeal::from_roots(7, kExampleIdeal);
  CHECK(m.thresholds() == std::vector<int>{5, 7, 8, 8, 8, 8});
  CHECK(m.size() == 4);
  CHECK(m.dim() == 17);
  CHECK(m.contains({7, 2}));
  CHECK_FALSE(m.contains({6, 2}));
  CHECK(m.live_roots().size() == 17);
}

TEST_CASE("closure matches the fixpoint oracle on random subsets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = oracle::random_subset(rng, n, 0.15);
    const std::vector<Root> seed(s.begin(), s.end());
    const auto c = closure(seed, n);
    const auto expect = oracle::closure_fixpoint(s, n);
    REQUIRE(as_set(c.roots()) == expect);

    // extensive, idempotent
    for (const auto& r : s) CHECK(c.contains(r));
    const auto again = closure(c.roots(), n);
    CHECK(again == c);
    // closure(S) == S exactly when S is regular
    CHECK((expect == s) == is_regular(seed, n));
    CHECK(oracle::closed(s, n) == is_regular(seed, n));

    // monotone: adding a root never shrinks the closure
    auto bigger = s;
    bigger.insert(oracle::all_positive(n)[static_cast<std::size_t>(trial) % oracle::all_positive(n).size()]);
    const std::vector<Root> seed2(bigger.begin(), bigger.end());
    for (const auto& r : c.roots()) CHECK(closure(seed2, n).contains(r));
  }
}

TEST_CASE("regular sets are exactly the staircases of their column minima") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = oracle::random_subset(rng, n, 0.5);
    // Rebuild from per-column minima; a staircase needs non-decreasing minima
    // and full columns below each minimum.
    std::vector<int> minima(static_cast<std::size_t>(n - 1), n + 1);
    for (const auto& r : s) minima[static_cast<std::size_t>(r.col - 1)] = std::min(minima[static_cast<std::size_t>(r.col - 1)], r.row);
    bool staircase = std::is_sorted(minima.begin(), minima.end());
    std::set<Root> rebuilt;
    for (int j = 1; j < n; ++j)
      for (int i = minima[static_cast<std::size_t>(j - 1)]; i <= n; ++i) rebuilt.insert({i, j});
    staircase = staircase && rebuilt == s;
    const std::vector<Root> v(s.begin(), s.end());
    CHECK(is_regular(v, n) == staircase);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_regular_ideals(1).size() == 1);
  CHECK(enumerate_regular_ideals(1).front().roots().empty());
  CHECK(enumerate_regular_ideals(3).size() == 5);
  CHECK(enumerate_regular_ideals(6).size() == 132);
  CHECK(enumerate_regular_ideals(7).size() == 429);

  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_regular_ideals(n);
    CHECK(static_cast<int>(all.size()) == oracle::count_closed_subsets(n));
    std::set<std::vector<int>> distinct;
    for (const auto& m : all) {
      distinct.insert(m.thresholds());
      CHECK(is_regular(m.roots(), n));
    }
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("n = 3 ideals are the five closed subsets") {
  std::set<std::set<Root>> got;
  for (const auto& m : enumerate_regular_ideals(3)) got.insert(as_set(m.roots()));
  const std::set<std::set<Root>> want{{}, {{3, 1}}, {{3, 1}, {3, 2}}, {{3, 1}, {2, 1}}, {{2, 1}, {3, 1}, {3, 2}}};
  CHECK(got == want);
}
