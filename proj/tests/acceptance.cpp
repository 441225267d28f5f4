// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Time limits are asserted where the criterion carries one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pzeta/catalog.hpp"
#include "pzeta/construct.hpp"
#include "pzeta/dseries.hpp"
#include "pzeta/moebius.hpp"
#include "pzeta/permgroup.hpp"
#include "support/oracles.hpp"

using namespace pzeta;
using namespace pzeta::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double seconds_limit,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (exception: ") + e.what() + ")";
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (seconds_limit > 0 && elapsed > seconds_limit) {
    ok = false;
    note += " (over time limit)";
  }
  std::printf("%s  criterion %2d: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), elapsed, note.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

const DirichletSeries kA5Expected = DirichletSeries::make(
    {{1, 1}, {5, -5}, {6, -6}, {10, -10}, {20, 20}, {30, 60}, {60, -60}}, 60);

DirichletSeries lattice_series(const char* text, Index bound) {
  return group_series(enumerate_subgroups(group_from(text)), bound);
}

bool divisibility_holds(const DirichletSeries& series) {
  for (const auto& [n, a] : series.terms())
    if (a % n != 0) return false;
  const auto inv = invert(series);
  for (const auto& [n, c] : inv.terms())
    if (c % n != 0) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "lattice-derived P(A_5) has exactly the seven expected terms", 5.0, [] {
    const auto lattice = enumerate_subgroups(group_from(kA5));
    return lattice.size() == 59 && group_series(lattice, 60) == kA5Expected;
  });

  criterion(2, "inverse of P(A_5) first goes negative at 20 with value -20", 1.0, [] {
    const auto inv = invert(kA5Expected);
    const auto neg = first_negative(inv);
    return neg && neg->first == 20 && neg->second == -20;
  });

  criterion(3, "C_2^2 x C_5^2 x A_5: inverse nonnegative before 50000, negative there", 30.0, [] {
    const Index bound = 65536;
    const auto series = recipe_series(example_50000_recipe(), bound);
    const auto inv = invert(series);
    const auto neg = first_negative(inv);
    if (!neg) return false;
    const bool as_stated = neg->first == 50000 && neg->second < 0;
    if (!as_stated) {
      // Exact computation: the full inverse goes negative earlier, at indices
      // divisible by 3 that the 2-5-smooth recurrence never reaches. The
      // criterion is reported as stated; criterion 4 carries the grid truth.
      std::printf("      observed first negative (%lld, %s); c(50000) = %s\n",
                  static_cast<long long>(neg->first),
                  to_decimal(neg->second).c_str(),
                  to_decimal(inv.coeff(50000)).c_str());
    }
    return as_stated;
  });

  criterion(4, "recurrence path equals inversion at every 2-5-smooth index <= 50000", 0.0, [] {
    const Index bound = 50000;
    const auto inv = invert(recipe_series(example_50000_recipe(), bound));
    const auto grid = example_recurrence_coefficients(16, 7);
    int checked = 0;
    for (const auto& [ik, value] : grid) {
      Index n = 1;
      for (int t = 0; t < ik.first; ++t) n *= 2;
      for (int t = 0; t < ik.second; ++t) n *= 5;
      if (n > bound) continue;
      ++checked;
      if (inv.coeff(n) != value) return false;
    }
    return checked == 64;  // #{2^i 5^k <= 50000}
  });

  criterion(5, "P_G = P_{G/N} * P_{G,N} on four lattice instances", 0.0, [] {
    const auto s3 = enumerate_subgroups(group_from(kS3));
    if (!quotient_factorization_check(s3, find_normal_of_order(s3, 3), 6))
      return false;

    const auto a4 = enumerate_subgroups(group_from(kA4));
    if (!quotient_factorization_check(a4, find_normal_of_order(a4, 4), 12))
      return false;

    const auto s3c5 = enumerate_subgroups(group_from("(1 2)\n(1 2 3)\n(4 5 6 7 8)"));
    if (!quotient_factorization_check(s3c5, find_normal_of_order(s3c5, 5), 30))
      return false;

    const auto a5c2 = enumerate_subgroups(group_from("(1 2 3 4 5)\n(1 2 3)\n(6 7)"));
    return quotient_factorization_check(a5c2, find_normal_of_order(a5c2, 60), 120);
  });

  criterion(6, "lattice series of coprime-order products factor exactly", 0.0, [] {
    struct Pair { const char* product; const char* left; const char* right; Index bound; };
    const Pair pairs[] = {
        {"(1 2)\n(1 2 3)\n(4 5 6 7 8)", kS3, "(1 2 3 4 5)", 30},
        {"(1 2 3)\n(2 3 4)\n(5 6 7 8 9)", kA4, "(1 2 3 4 5)", 60},
        {"(1 2 3 4)\n(1 3)\n(5 6 7)", kD4, "(1 2 3)", 24},
        {"(1 2 3 4)\n(5 6 7 8 9 10 11 12 13)", "(1 2 3 4)", "(1 2 3 4 5 6 7 8 9)", 36},
    };
    for (const auto& p : pairs) {
      const auto whole = lattice_series(p.product, p.bound);
      const auto factored =
          mul(lattice_series(p.left, p.bound), lattice_series(p.right, p.bound));
      if (whole != factored) return false;
    }
    return true;
  });

  criterion(7, "n | a_n and n | c_n for A_5, A_5^2, A_5^3", 0.0, [] {
    const auto a5 = lattice_series(kA5, 60);
    if (!divisibility_holds(a5)) return false;
    const auto base2 = lattice_series(kA5, 3600);
    if (!divisibility_holds(boston_power_series(base2, 2, 120, 60))) return false;
    const auto base3 = lattice_series(kA5, 216000);
    return divisibility_holds(boston_power_series(base3, 3, 120, 60));
  });

  criterion(8, "construction replay from A_5 cancels c_20 with f_2 = 1", 5.0, [] {
    const auto result = run_construction(SeriesRecipe{LatticeRecipe{kA5, -1}}, 380, 5);
    if (result.trace.size() < 2) return false;
    const auto& step2 = result.trace[1];
    if (step2.k != 2 || step2.degree != 20 || step2.multiplicity != 1) return false;
    if (result.state.inverse.coeff(20) != 0) return false;
    for (const auto& [n, c] : result.state.inverse.terms())
      if (n <= result.state.frontier && c < 0) return false;
    return true;
  });

  criterion(9, "property suites: ring identities, factorization counts, factorial bound", 0.0, [] {
    std::mt19937_64 rng(50000);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto a = random_unital_series(rng, 2048);
      if (mul(a, invert(a)) != DirichletSeries::unit(a.bound())) return false;
      if (invert(invert(a)) != a) return false;
      if (trial % 2 == 0) {
        const auto b = random_unital_series(rng, 2048);
        if (mul(a, b) != mul(b, a)) return false;
        const Index bound = std::min(a.bound(), b.bound());
        if (invert(mul(a, b)) != mul(invert(restricted(a, bound)),
                                     invert(restricted(b, bound))))
          return false;
      }
      if (trial % 5 == 0) {
        const auto b = random_unital_series(rng, 512);
        const auto c = random_unital_series(rng, 512);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
      }
    }

    for (Index n = 1; n <= 5000; ++n) {
      if (ordered_factorization_count(n) >
          static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
        return false;
    }

    for (Index n = 6; n <= 60; ++n) {
      const Integer cap = factorial(n) / (Integer(n) * n);
      for (const auto& f : ordered_factorizations(n)) {
        if (f.parts.size() < 2) continue;
        Integer prod = 1;
        for (Index part : f.parts) prod *= factorial(part);
        if (prod > cap) return false;
      }
    }
    return true;
  });

  criterion(10, "infinite-limit and unspecified-constant results stay out of scope "
                "(covered only by the finite property suites)", 0.0, [] {
    return true;  // documented non-goal; nothing to compute
  });

  std::printf("%s: %d/10 criteria passed\n", failures == 0 ? "RESULT" : "RESULT (FAILING)",
              10 - failures);
  return failures == 0 ? 0 : 1;
}
