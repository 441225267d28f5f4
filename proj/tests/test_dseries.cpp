#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pzeta/dseries.hpp"
#include "pzeta/error.hpp"
#include "support/oracles.hpp"

using namespace pzeta;
using namespace pzeta::testing;

namespace {

DirichletSeries a5_series(Index bound = 60) {
  return DirichletSeries::make(
      {{1, 1}, {5, -5}, {6, -6}, {10, -10}, {20, 20}, {30, 60}, {60, -60}},
      bound);
}

}  // namespace

TEST_CASE("make: unit, sparse storage, zero elision") {
  const auto unit = DirichletSeries::unit(100);
  CHECK(unit.bound() == 100);
  CHECK(unit.terms().size() == 1);
  CHECK(unit.coeff(1) == 1);
  CHECK(unit.coeff(7) == 0);
  CHECK(unit.unital());

  const auto a5 = a5_series();
  CHECK(a5.terms().size() == 7);
  CHECK(a5.coeff(30) == 60);
  CHECK(a5.coeff(60) == -60);

  const auto zero = DirichletSeries::make({{2, 0}}, 10);
  CHECK(zero.terms().empty());
}

TEST_CASE("make: rejects bad input") {
  CHECK_THROWS_AS(DirichletSeries::make({}, 0), Error);
  CHECK_THROWS_AS(DirichletSeries::make({{2, 1}, {2, 3}}, 10), Error);
  CHECK_THROWS_AS(DirichletSeries::make({{11, 1}}, 10), Error);
  CHECK_THROWS_AS(DirichletSeries::make({{0, 1}}, 10), Error);
}

TEST_CASE("coefficient queries beyond the bound are errors") {
  const auto a5 = a5_series();
  CHECK_THROWS_AS(a5.coeff(61), Error);
  CHECK_THROWS_AS(a5.coeff(0), Error);
  CHECK_THROWS_AS(restricted(a5, 61), Error);
  CHECK(restricted(a5, 10).terms().size() == 4);
}

TEST_CASE("mul: unit is neutral and small products expand by hand") {
  const auto a5 = a5_series();
  CHECK(mul(a5, DirichletSeries::unit(60)) == a5);

  // (1 - 1/2^s)(1 - 2/2^s) = 1 - 3/2^s + 2/4^s
  const auto lhs = mul(DirichletSeries::make({{1, 1}, {2, -1}}, 16),
                       DirichletSeries::make({{1, 1}, {2, -2}}, 16));
  CHECK(lhs == DirichletSeries::make({{1, 1}, {2, -3}, {4, 2}}, 16));

  // (1 - 1/2^s)(1 - 3/3^s) = 1 - 1/2^s - 3/3^s + 3/6^s
  const auto rhs = mul(DirichletSeries::make({{1, 1}, {2, -1}}, 6),
                       DirichletSeries::make({{1, 1}, {3, -3}}, 6));
  CHECK(rhs == DirichletSeries::make({{1, 1}, {2, -1}, {3, -3}, {6, 3}}, 6));
}

TEST_CASE("mul: bound is the min of the operand bounds") {
  const auto a = DirichletSeries::make({{1, 1}, {2, 1}}, 100);
  const auto b = DirichletSeries::make({{1, 1}, {3, 1}}, 7);
  const auto p = mul(a, b);
  CHECK(p.bound() == 7);
  CHECK(p == DirichletSeries::make({{1, 1}, {2, 1}, {3, 1}, {6, 1}}, 7));
}

TEST_CASE("invert: unit and the alternating degree-5 series") {
  CHECK(invert(DirichletSeries::unit(50)) == DirichletSeries::unit(50));

  const auto inv = invert(a5_series());
  CHECK(inv.coeff(1) == 1);
  CHECK(inv.coeff(5) == 5);
  CHECK(inv.coeff(6) == 6);
  CHECK(inv.coeff(10) == 10);
  CHECK(inv.coeff(20) == -20);
  CHECK(inv.coeff(30) == 0);

  CHECK_THROWS_AS(invert(DirichletSeries::make({{1, 2}}, 5)), Error);
  CHECK_THROWS_AS(invert(DirichletSeries::make({{2, 1}}, 5)), Error);
}

TEST_CASE("first_negative") {
  CHECK(!first_negative(DirichletSeries::unit(10)).has_value());
  const auto neg = first_negative(invert(a5_series()));
  REQUIRE(neg.has_value());
  CHECK(neg->first == 20);
  CHECK(neg->second == -20);
}

TEST_CASE("mul and invert agree with the definitional oracles") {
  std::mt19937_64 rng(20260810);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_unital_series(rng, 256);
    const auto b = random_unital_series(rng, 256);
    const Index bound = std::min(a.bound(), b.bound());
    CHECK(mul(a, b).terms() == naive_mul(a.terms(), b.terms(), bound));
    CHECK(invert(a).terms() == naive_invert(a.terms(), a.bound()));
  }
}

TEST_CASE("ring identities on random sparse unital series") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_unital_series(rng, 512);
    auto b = random_unital_series(rng, 512);
    auto c = random_unital_series(rng, 512);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, DirichletSeries::unit(a.bound())) == a);

    CHECK(mul(a, invert(a)) == DirichletSeries::unit(a.bound()));
    CHECK(invert(invert(a)) == a);

    const Index bound = std::min(a.bound(), b.bound());
    CHECK(invert(mul(a, b)) == mul(invert(restricted(a, bound)),
                                   invert(restricted(b, bound))));
  }
}

TEST_CASE("pow_truncated matches repeated multiplication") {
  std::mt19937_64 rng(7);
  const auto a = random_unital_series(rng, 200);
  auto by_mul = DirichletSeries::unit(a.bound());
  for (int e = 0; e <= 6; ++e) {
    CHECK(pow_truncated(a, e) == by_mul);
    by_mul = mul(by_mul, a);
  }
}

TEST_CASE("ordered factorizations: exact small cases, lexicographic") {
  using OF = OrderedFactorization;
  CHECK(ordered_factorizations(2) == std::vector<OF>{{{2}}});
  CHECK(ordered_factorizations(4) == std::vector<OF>{{{2, 2}}, {{4}}});
  CHECK(ordered_factorizations(6) == std::vector<OF>{{{2, 3}}, {{3, 2}}, {{6}}});
  CHECK(ordered_factorizations(12) ==
        std::vector<OF>{{{2, 2, 3}}, {{2, 3, 2}}, {{2, 6}}, {{3, 2, 2}},
                        {{3, 4}}, {{4, 3}}, {{6, 2}}, {{12}}});
  CHECK_THROWS_AS(ordered_factorizations(1), Error);
  CHECK_THROWS_AS(ordered_factorizations(0), Error);
}

TEST_CASE("ordered factorization counting matches enumeration") {
  for (Index n = 2; n <= 300; ++n) {
    CHECK(ordered_factorization_count(n) == ordered_factorizations(n).size());
    CHECK(ordered_factorization_count(n) <=
          static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
  }
  CHECK(ordered_factorization_count(1) == 1);
}

TEST_CASE("nontrivial factorizations obey the factorial product bound") {
  // prod n_i! <= n!/n^2 for n in (5, 20] here; the full range runs in the
  // acceptance suite.
  for (Index n = 6; n <= 20; ++n) {
    const Integer cap = factorial(n) / (Integer(n) * n);
    for (const auto& f : ordered_factorizations(n)) {
      if (f.parts.size() < 2) continue;
      Integer prod = 1;
      for (Index part : f.parts) prod *= factorial(part);
      CHECK(prod <= cap);
    }
  }
}

TEST_CASE("coefficient bound check") {
  const auto a5 = a5_series();
  CHECK(coefficient_bound_check(a5, 20));
  for (Index n : {1, 2, 7, 50})
    CHECK(coefficient_bound_check(DirichletSeries::unit(50), n));
  // |c_8| = 1 for 1 - 1/2^s; the bound side is also 1 ([2,2,2] only).
  const auto c2 = DirichletSeries::make({{1, 1}, {2, -1}}, 8);
  CHECK(coefficient_bound_check(c2, 8));
}

TEST_CASE("integer utilities") {
  CHECK(parse_integer("-123456789012345678901234567890") ==
        -Integer("123456789012345678901234567890"));
  CHECK(parse_integer("0012") == 12);
  CHECK_THROWS_AS(parse_integer(""), Error);
  CHECK_THROWS_AS(parse_integer("-"), Error);
  CHECK_THROWS_AS(parse_integer("+5"), Error);
  CHECK_THROWS_AS(parse_integer("12 "), Error);

  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Integer("2432902008176640000"));

  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));

  CHECK(prime_factors(1).empty());
  CHECK(prime_factors(300) == std::vector<std::int64_t>{2, 3, 5});
}

TEST_CASE("coefficient bound check holds across a whole inverse") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_unital_series(rng, 64);
    for (Index n = 1; n <= a.bound(); ++n) CHECK(coefficient_bound_check(a, n));
  }
}
