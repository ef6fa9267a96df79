#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coadj/permutation.hpp"
#include "oracles.hpp"

using namespace coadj;

namespace {

RegularIdeal example_ideal() {
  const std::vector<Root> roots{{5, 1}, {6, 1}, {7, 1}, {7, 2}};
  return RegularIdeal::from_roots(7, roots);
}

Permutation one_line(std::vector<int> v) { return Permutation::from_one_line(std::move(v)); }

// Applies r_{word[0]} ... r_{word[s-1]} to x, last factor first.
int apply_word(const std::vector<Root>& word, int x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (x == it->row)
      x = it->col;
    else if (x == it->col)
      x = it->row;
  }
  return x;
}

// Bubble sort swap count.
long bubble_swaps(std::vector<int> v) {
  long swaps = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] > v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        ++swaps;
        moved = true;
      }
  }
  return swaps;
}

}  // namespace

TEST_CASE("greedy permutation examples") {
  CHECK(build_w(example_ideal()).one_line() == std::vector<int>{4, 6, 7, 5, 3, 2, 1});
  CHECK(build_w(RegularIdeal(3)).one_line() == std::vector<int>{3, 2, 1});

  std::vector<int> all_dead;
  for (int j = 1; j < 6; ++j) all_dead.push_back(j + 1);
  CHECK(build_w(RegularIdeal::from_thresholds(6, all_dead)) == Permutation(6));
}

TEST_CASE("inversions") {
  CHECK(inversions(one_line({4, 6, 7, 5, 3, 2, 1})) == 17);
  CHECK(inversions(Permutation(5)) == 0);
  CHECK(inversions(one_line({3, 2, 1})) == 3);
}

TEST_CASE("one-line validation") {
  CHECK_THROWS_AS(one_line({1, 1, 2}), InputError);
  CHECK_THROWS_AS(one_line({0, 1}), InputError);
  CHECK_THROWS_AS(Permutation::reflection(3, {4, 1}), InputError);
}

TEST_CASE("reflection products compose right to left") {
  const std::vector<Root> word{{4, 1}, {6, 2}, {7, 3}, {7, 4}, {5, 4}};
  CHECK(reflection_product(7, word).one_line() == std::vector<int>{4, 6, 7, 5, 3, 2, 1});
  CHECK(reflection_product(7, std::vector<Root>{}) == Permutation(7));
  CHECK(reflection_product(4, std::vector<Root>{{2, 1}}).one_line() == std::vector<int>{2, 1, 3, 4});

  const auto partial = partial_products(7, word);
  REQUIRE(partial.size() == 6);
  CHECK(partial[0] == Permutation(7));
  CHECK(partial[1].one_line() == std::vector<int>{4, 2, 3, 1, 5, 6, 7});
  CHECK(partial[4].one_line() == std::vector<int>{4, 6, 7, 3, 5, 2, 1});
  CHECK(partial[5] == build_w(example_ideal()));
}

TEST_CASE("column prefix products") {
  const Diagram d(example_ideal());
  CHECK(column_prefix_product(d, 0) == Permutation(7));
  CHECK(column_prefix_product(d, 1).one_line() == std::vector<int>{4, 2, 3, 1, 5, 6, 7});
  CHECK(column_prefix_product(d, 4) == build_w(example_ideal()));
  CHECK(column_prefix_product(d, 7) == build_w(example_ideal()));
  CHECK_THROWS_AS(column_prefix_product(d, 8), InputError);
}

TEST_CASE("root signs") {
  CHECK(root_sign(Permutation(6), {5, 2}) == Sign::Positive);
  CHECK(root_sign(Permutation::reflection(4, {4, 1}), {4, 1}) == Sign::Negative);
  const auto w2 = partial_products(7, std::vector<Root>{{4, 1}, {6, 2}})[2];
  CHECK(w2.apply({4, 2}) == Root{1, 6});
  CHECK(root_sign(w2, {4, 2}) == Sign::Negative);
}

TEST_CASE("sign classification examples") {
  const auto m = example_ideal();
  CHECK(classify_by_signs(m, {4, 2}) == SignClass::Minus);
  CHECK(classify_by_signs(m, {7, 2}) == SignClass::Bullet);
  CHECK(classify_by_signs(m, {3, 2}) == SignClass::PlusOrCross);
}

TEST_CASE("permutation properties for every ideal up to n = 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& m : enumerate_regular_ideals(n)) {
      const Diagram d(m);
      const Permutation w = build_w(m);
      const auto crosses = d.crosses();

      // length equals dimension
      CHECK(bubble_swaps(w.one_line()) == m.dim());
      CHECK(inversions(w) == m.dim());

      // w factors as the reflections at the crosses
      for (int x = 1; x <= n; ++x) REQUIRE(apply_word(crosses, x) == w(x));

      const auto partial = partial_products(n, crosses);
      const auto live = m.live_roots();
      for (int i = 1; i <= static_cast<int>(crosses.size()); ++i) {
        const Root xi = crosses[static_cast<std::size_t>(i - 1)];
        const auto b = d.remaining_after(i);
        for (const auto& eta : b) {
          REQUIRE(succeeds(xi, eta));
          for (int j = 0; j <= i; ++j) REQUIRE(root_sign(partial[static_cast<std::size_t>(j)], eta) == Sign::Positive);
        }
        for (const auto& eta : d.d_minus(i)) REQUIRE(root_sign(partial[static_cast<std::size_t>(i)], eta) == Sign::Negative);
        for (const auto& eta : d.d_plus(i)) {
          REQUIRE(eta.col == xi.col);
          REQUIRE(root_sign(partial[static_cast<std::size_t>(i)], eta) == Sign::Negative);
        }
      }

      for (int t = 1; t < n; ++t) {
        int a = t;
        for (int c = t + 1; c <= n; ++c)
          if (!m.contains({c, t})) a = c;
        const Permutation wt = column_prefix_product(d, t);
        for (int b = t + 1; b <= n; ++b)
          REQUIRE(root_sign(wt, {b, t}) == (b > a ? Sign::Positive : Sign::Negative));
      }

      for (const auto& eta : positive_roots(n)) {
        const auto [before, after] = sign_profile(d, eta);
        const bool minus = before == Sign::Negative;
        const bool bullet = after == Sign::Positive;
        const bool plus_or_cross = before == Sign::Positive && after == Sign::Negative;
        REQUIRE(minus + bullet + plus_or_cross == 1);
        const Symbol s = d.at(eta);
        CHECK(minus == (s == Symbol::Minus));
        CHECK(bullet == (s == Symbol::Bullet));
        CHECK(plus_or_cross == (s == Symbol::Plus || s == Symbol::Cross));
      }
    }
  }
}
