#pragma once

// Test-only reference implementations, deliberately independent of the
// library's optimized paths: definitional Dirichlet convolution/inversion
// over all divisors, and subgroup enumeration by brute force over small
// generating sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pzeta/dseries.hpp"
#include "pzeta/integer.hpp"
#include "pzeta/moebius.hpp"
#include "pzeta/permgroup.hpp"

namespace pzeta::testing {

/// Definitional product: (AB)[n] = sum over all divisors d of n of A[d]B[n/d],
/// found by trial division.
inline std::map<Index, Integer> naive_mul(const std::map<Index, Integer>& a,
                                          const std::map<Index, Integer>& b,
                                          Index bound) {
  auto at = [](const std::map<Index, Integer>& m, Index n) -> Integer {
    auto it = m.find(n);
    return it == m.end() ? Integer(0) : it->second;
  };
  std::map<Index, Integer> out;
  for (Index n = 1; n <= bound; ++n) {
    Integer acc = 0;
    for (Index d = 1; d <= n; ++d)
      if (n % d == 0) acc += at(a, d) * at(b, n / d);
    if (acc != 0) out[n] = acc;
  }
  return out;
}

/// Definitional inversion: c_1 = 1, c_n = -sum over divisors r != 1 of n of
/// a_r c_{n/r}, with the divisors found by trial division.
inline std::map<Index, Integer> naive_invert(const std::map<Index, Integer>& a,
                                             Index bound) {
  auto at = [](const std::map<Index, Integer>& m, Index n) -> Integer {
    auto it = m.find(n);
    return it == m.end() ? Integer(0) : it->second;
  };
  std::map<Index, Integer> c;
  c[1] = 1;
  for (Index n = 2; n <= bound; ++n) {
    Integer acc = 0;
    for (Index r = 2; r <= n; ++r)
      if (n % r == 0) acc += at(a, r) * at(c, n / r);
    if (acc != 0) c[n] = -acc;
  }
  std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return c;
}

inline std::map<Index, Integer> terms_of(const DirichletSeries& s) {
  return s.terms();
}

/// Every subgroup generated by at most `max_gens` elements (with repetition,
/// so smaller generating sets are covered). For groups where every subgroup
/// is `max_gens`-generated this is the complete lattice.
inline std::set<std::vector<std::uint32_t>> brute_force_subgroups(
    const PermGroup& g, int max_gens = 3) {
  std::set<std::vector<std::uint32_t>> out;
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  out.insert(generated_subgroup(g, {}));
  for (std::uint32_t i = 0; i < n; ++i) {
    if (max_gens < 1) break;
    out.insert(generated_subgroup(g, {i}));
    for (std::uint32_t j = i; j < n && max_gens >= 2; ++j) {
      out.insert(generated_subgroup(g, {i, j}));
      for (std::uint32_t k = j; k < n && max_gens >= 3; ++k)
        out.insert(generated_subgroup(g, {i, j, k}));
    }
  }
  return out;
}

/// Deterministic sparse unital series for property tests.
inline DirichletSeries random_unital_series(std::mt19937_64& rng,
                                            Index max_bound = 2048) {
  std::uniform_int_distribution<Index> bound_dist(2, max_bound);
  const Index bound = bound_dist(rng);
  std::uniform_int_distribution<int> size_dist(0, 10);
  std::uniform_int_distribution<Index> index_dist(2, bound);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);

  std::map<Index, Integer> terms;
  const int size = size_dist(rng);
  for (int t = 0; t < size; ++t) {
    Index n = index_dist(rng);
    int c = coeff_dist(rng);
    if (c != 0) terms[n] = c;  // later draws overwrite earlier ones
  }
  std::vector<std::pair<Index, Integer>> pairs(terms.begin(), terms.end());
  pairs.emplace_back(1, 1);
  return DirichletSeries::make(pairs, bound);
}

// Common generator texts.
inline constexpr const char* kA5 = "(1 2 3 4 5)\n(1 2 3)";
inline constexpr const char* kS3 = "(1 2)\n(1 2 3)";
inline constexpr const char* kA4 = "(1 2 3)\n(2 3 4)";
inline constexpr const char* kD4 = "(1 2 3 4)\n(1 3)";
inline constexpr const char* kC6 = "(1 2 3 4 5 6)";

inline PermGroup group_from(const char* text, std::int64_t order_limit = 10000) {
  const auto gens = parse_generators(text);
  return close_generators(gens.empty() ? 1 : gens.front().degree(), gens,
                          order_limit);
}

/// Position of the unique subgroup matching (order, normal) — fails the test
/// if it is not unique.
inline std::uint32_t find_normal_of_order(const SubgroupLattice& l,
                                          std::int64_t order) {
  std::vector<std::uint32_t> hits;
  for (std::uint32_t i = 0; i < l.size(); ++i)
    if (l.subgroups()[i].order() == order && is_normal(l.group(), l.subgroups()[i]))
      hits.push_back(i);
  if (hits.size() != 1) throw Error("expected exactly one normal subgroup of order " +
                                    std::to_string(order));
  return hits[0];
}

}  // namespace pzeta::testing
