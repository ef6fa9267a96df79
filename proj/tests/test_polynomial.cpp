#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coadj/polynomial.hpp"
#include "oracles.hpp"

using namespace coadj;

namespace {

SparsePoly P(const char* s) { return parse_poly(s); }

const std::vector<Variable> kPool{Variable::y(2, 1), Variable::y(3, 1), Variable::y(3, 2), Variable::y(4, 1),
                                  Variable::lambda()};

SparsePoly random_poly(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> terms(0, max_terms), coeff(-3, 3), var(0, static_cast<int>(kPool.size()) - 1),
      deg(0, 2);
  SparsePoly p;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (int f = deg(rng); f > 0; --f) m = m * Monomial(kPool[static_cast<std::size_t>(var(rng))]);
    p += SparsePoly(m, coeff(rng));
  }
  return p;
}

SymbolicMatrix random_matrix(std::mt19937& rng, std::size_t k) {
  SymbolicMatrix m(k, k);
  std::bernoulli_distribution sparse(0.3);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!sparse(rng)) m.set(i, j, random_poly(rng, 2));
  return m;
}

Assignment random_point(std::mt19937_64& rng, Residue p) {
  std::uniform_int_distribution<Residue> draw(0, p - 1);
  Assignment a;
  for (const auto& v : kPool) a[v] = draw(rng);
  return a;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  const auto y21 = SparsePoly::y(2, 1);
  CHECK((y21 + (-y21)).is_zero());
  const auto prod = y21 * SparsePoly::y(3, 2);
  REQUIRE(prod.size() == 1);
  CHECK(prod.terms().begin()->second == 1);
  CHECK(to_string(prod) == "y32*y21");
  const auto s = SparsePoly::y(3, 1) + SparsePoly::y(4, 2);
  CHECK(s * s == P("y31^2") + 2 * P("y31*y42") + P("y42^2"));
  CHECK(SparsePoly().is_zero());
  CHECK(SparsePoly(0).is_zero());
}

TEST_CASE("canonical strings") {
  CHECK(to_string(SparsePoly()) == "0");
  CHECK(to_string(P("y73*y31 + y74*y41")) == "y74*y41 + y73*y31");
  CHECK(to_string(P("3*y21^2*y32 - 1")) == "3*y32*y21^2 - 1");
  CHECK(to_string(-SparsePoly::lambda() * SparsePoly::y(2, 1)) == "-lambda*y21");
  CHECK(to_string(SparsePoly::y(10, 3)) == "y_10_3");
  CHECK(P("y_10_3") == SparsePoly::y(10, 3));
  // lambda outranks every y
  CHECK(to_string(P("y76^3 + lambda")) == "lambda + y76^3");
  CHECK_THROWS_AS(P("y7"), InputError);
  CHECK_THROWS_AS(P("y21 +"), InputError);
  CHECK_THROWS_AS(P("y21 ? y32"), InputError);
}

TEST_CASE("canonical string parses back") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng);
    CHECK(parse_poly(to_string(p)) == p);
  }
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("y41*y74 + y31*y73"), Variable::y(7, 4)) == P("y41"));
  CHECK(partial_derivative(P("y21^3"), Variable::y(2, 1)) == P("3*y21^2"));
  CHECK(partial_derivative(P("y21"), Variable::y(3, 1)).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    // Leibniz rule for the formal derivative
    const Variable v = Variable::y(2, 1);
    CHECK(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
  }
}

TEST_CASE("determinant examples") {
  SymbolicMatrix one(1, 1);
  one.set(0, 0, P("y21"));
  CHECK(determinant(one) == P("y21"));

  SymbolicMatrix two(2, 2);
  two.set(0, 0, -SparsePoly::lambda());
  two.set(1, 0, P("y21"));
  two.set(1, 1, -SparsePoly::lambda());
  CHECK(determinant(two) == P("lambda^2"));

  CHECK(determinant(SymbolicMatrix(0, 0)) == SparsePoly(1));
  CHECK_THROWS_AS(determinant(SymbolicMatrix(2, 3)), InputError);
}

TEST_CASE("determinant of the rows {3,4,6,7} x columns {1,2,3,4} minor") {
  const auto lam = -SparsePoly::lambda();
  SymbolicMatrix m(4, 4);
  m.set(0, 0, P("y31"));
  m.set(0, 1, P("y32"));
  m.set(0, 2, lam);
  m.set(1, 0, P("y41"));
  m.set(1, 1, P("y42"));
  m.set(1, 2, P("y43"));
  m.set(1, 3, lam);
  m.set(2, 1, P("y62"));
  m.set(2, 2, P("y63"));
  m.set(2, 3, P("y64"));
  m.set(3, 2, P("y73"));
  m.set(3, 3, P("y74"));

  const auto expected = -P("y73") * (P("y31*y42*y64") + P("lambda*y31*y62") - P("y32*y41*y64")) +
                        P("y74") * (P("y31*y42*y63") - P("y31*y43*y62") - P("y32*y41*y63") - P("lambda*y41*y62"));
  CHECK(oracle::leibniz_det(m) == expected);
  CHECK(determinant(m) == expected);

  const auto coeffs = lambda_coefficients(determinant(m));
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[1] == -P("y62") * P("y74*y41 + y73*y31"));
}

TEST_CASE("lambda coefficients") {
  const auto c = lambda_coefficients(P("lambda^2"));
  REQUIRE(c.size() == 3);
  CHECK(c[0].is_zero());
  CHECK(c[1].is_zero());
  CHECK(c[2] == SparsePoly(1));
  CHECK(lambda_coefficients(P("y21")) == std::vector<SparsePoly>{P("y21")});
  CHECK(lambda_coefficients(SparsePoly()).empty());
}

TEST_CASE("determinant agrees with the Leibniz sum and alternates under row swaps") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 4);
    const auto m = random_matrix(rng, k);
    const auto det = determinant(m);
    CHECK(det == oracle::leibniz_det(m));
    if (k >= 2) {
      std::vector<std::size_t> rows(k), cols(k);
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::swap(rows[0], rows[k - 1]);
      CHECK(determinant(m.submatrix(rows, cols)) == -det);
    }
  }
}

TEST_CASE("modular evaluation") {
  Assignment a{{Variable::y(2, 1), 5}};
  CHECK(evaluate_mod_p(P("y21"), a, 101) == 5);
  a = {{Variable::y(2, 1), 3}, {Variable::y(3, 2), 4}};
  CHECK(evaluate_mod_p(P("y21*y32 + 1"), a, 7) == 6);
  CHECK(evaluate_mod_p(SparsePoly(), {}, 7) == 0);
  CHECK(evaluate_mod_p(P("-1"), {}, 7) == 6);
  CHECK_THROWS_AS(evaluate_mod_p(P("y31"), a, 7), InputError);
}

TEST_CASE("evaluated determinant equals the modular determinant of the evaluated matrix") {
  std::mt19937 rng(29);
  std::mt19937_64 rng64(31);
  for (const Residue p : {Residue{1000003}, kMersenne61}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t k = 1 + static_cast<std::size_t>(trial % 5);
      const auto m = random_matrix(rng, k);
      const auto at = random_point(rng64, p);
      CHECK(evaluate_mod_p(determinant(m), at, p) == determinant_mod_p(m.evaluate_mod_p(at, p), p));
    }
  }
}

TEST_CASE("exact division") {
  const auto a = P("y74*y41 + y73*y31");
  const auto b = P("y62");
  CHECK(divide_exact(-b * a, b) == -a);
  CHECK(divide_exact(a * a, a) == a);
  CHECK_FALSE(divide_exact(a, b).has_value());
  CHECK_FALSE(divide_exact(P("y21"), P("2")).has_value());
  CHECK(divide_exact(P("4*y21"), P("2")) == P("2*y21"));
  CHECK_THROWS_AS(divide_exact(a, SparsePoly()), InputError);

  std::mt19937 rng(37);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_poly(rng), y = random_poly(rng);
    if (y.is_zero()) continue;
    CHECK(divide_exact(x * y, y) == x);
  }
}

TEST_CASE("modular rank") {
  ModMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 1;
  CHECK(rank_mod_p(m, 101) == 2);
  CHECK(determinant_mod_p(m, 101) == 0);
  CHECK(rank_mod_p(ModMatrix(0, 4), 101) == 0);
  CHECK(inv_mod(3, 7) == 5);
}
