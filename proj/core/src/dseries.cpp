#include "pzeta/dseries.hpp"

#include <algorithm>
#include <string>

#include "pzeta/error.hpp"

namespace pzeta {

DirichletSeries DirichletSeries::unit(Index bound) {
  return make({{1, 1}}, bound);
}

DirichletSeries DirichletSeries::make(
    const std::vector<std::pair<Index, Integer>>& pairs, Index bound) {
  if (bound < 1) throw Error("series bound must be >= 1");
  std::map<Index, Integer> terms;
  for (const auto& [n, c] : pairs) {
    if (n < 1 || n > bound)
      throw Error("series index " + std::to_string(n) + " outside [1, " +
                  std::to_string(bound) + "]");
    if (!terms.emplace(n, c).second)
      throw Error("duplicate series index " + std::to_string(n));
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return DirichletSeries(bound, std::move(terms));
}

const Integer& DirichletSeries::coeff(Index n) const {
  static const Integer zero = 0;
  if (n < 1 || n > bound_)
    throw Error("coefficient query at " + std::to_string(n) +
                " outside [1, " + std::to_string(bound_) + "]");
  auto it = terms_.find(n);
  return it == terms_.end() ? zero : it->second;
}

bool DirichletSeries::unital() const {
  auto it = terms_.find(1);
  return it != terms_.end() && it->second == 1;
}

DirichletSeries mul(const DirichletSeries& a, const DirichletSeries& b) {
  const Index bound = std::min(a.bound_, b.bound_);
  std::map<Index, Integer> terms;
  for (const auto& [d, ca] : a.terms_) {
    if (d > bound) break;
    const Index limit = bound / d;
    for (const auto& [e, cb] : b.terms_) {
      if (e > limit) break;
      terms[d * e] += ca * cb;
    }
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  return DirichletSeries(bound, std::move(terms));
}

DirichletSeries invert(const DirichletSeries& a) {
  if (!a.unital()) throw Error("inversion requires a unital series");
  const Index bound = a.bound_;

  // Support of a beyond the constant term, ascending.
  std::vector<std::pair<Index, Integer>> support;
  for (const auto& [d, c] : a.terms_)
    if (d > 1) support.emplace_back(d, c);

  // Dense scratch for c_n; the result is re-sparsified below. Only indices
  // that are products of support indices can be nonzero.
  std::vector<Integer> c(static_cast<std::size_t>(bound) + 1);
  c[1] = 1;
  for (Index n = 2; n <= bound; ++n) {
    Integer acc = 0;
    for (const auto& [d, ca] : support) {
      if (d > n) break;
      if (n % d == 0) acc += ca * c[static_cast<std::size_t>(n / d)];
    }
    if (acc != 0) c[static_cast<std::size_t>(n)] = -acc;
  }

  std::map<Index, Integer> terms;
  for (Index n = 1; n <= bound; ++n)
    if (c[static_cast<std::size_t>(n)] != 0)
      terms.emplace(n, std::move(c[static_cast<std::size_t>(n)]));
  return DirichletSeries(bound, std::move(terms));
}

DirichletSeries pow_truncated(const DirichletSeries& a, const Integer& e) {
  if (e < 0) throw Error("negative series power");
  DirichletSeries result = DirichletSeries::unit(a.bound());
  DirichletSeries base = a;
  Integer k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

DirichletSeries restricted(const DirichletSeries& a, Index new_bound) {
  if (new_bound < 1 || new_bound > a.bound_)
    throw Error("restriction bound must lie in [1, " +
                std::to_string(a.bound_) + "]");
  std::map<Index, Integer> terms;
  for (const auto& [n, c] : a.terms_) {
    if (n > new_bound) break;
    terms.emplace(n, c);
  }
  return DirichletSeries(new_bound, std::move(terms));
}

std::optional<std::pair<Index, Integer>> first_negative(
    const DirichletSeries& a) {
  for (const auto& [n, c] : a.terms())
    if (c < 0) return std::make_pair(n, c);
  return std::nullopt;
}

namespace {

std::vector<Index> proper_divisors(Index n) {
  std::vector<Index> divs;  // divisors of n in [2, n), ascending
  for (Index d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());
  return divs;
}

void factorizations_rec(Index n, std::vector<Index>& prefix,
                        std::vector<OrderedFactorization>& out) {
  // First parts ascending: every proper divisor >= 2, then n itself last,
  // which makes the whole enumeration lexicographic.
  for (Index d : proper_divisors(n)) {
    prefix.push_back(d);
    factorizations_rec(n / d, prefix, out);
    prefix.pop_back();
  }
  prefix.push_back(n);
  out.push_back({prefix});
  prefix.pop_back();
}

std::uint64_t count_rec(Index n, std::map<Index, std::uint64_t>& memo) {
  if (n == 1) return 1;  // the empty product
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 1;  // [n] itself
  for (Index d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      total += count_rec(n / d, memo);
      if (d != n / d) total += count_rec(d, memo);
    }
  memo.emplace(n, total);
  return total;
}

}  // namespace

std::vector<OrderedFactorization> ordered_factorizations(Index n) {
  if (n < 2) throw Error("ordered factorizations require n >= 2");
  std::vector<OrderedFactorization> out;
  std::vector<Index> prefix;
  factorizations_rec(n, prefix, out);
  return out;
}

std::uint64_t ordered_factorization_count(Index n) {
  if (n < 1) throw Error("ordered factorization count requires n >= 1");
  std::map<Index, std::uint64_t> memo;
  return count_rec(n, memo);
}

bool coefficient_bound_check(const DirichletSeries& a, Index n) {
  if (!a.unital()) throw Error("coefficient_bound_check requires a unital series");
  if (n < 1 || n > a.bound()) throw Error("coefficient_bound_check index outside bound");
  if (n == 1) return true;  // |c_1| = 1 and the empty factorization gives 1

  const Integer lhs_c = invert(restricted(a, n)).coeff(n);
  const Integer lhs = lhs_c < 0 ? Integer(-lhs_c) : lhs_c;

  // rhs[m] = sum over ordered factorizations of m of the |a|-products,
  // computed over the divisors of n only.
  std::vector<Index> divisors;
  for (Index d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divisors.push_back(d);
      if (d != n / d) divisors.push_back(n / d);
    }
  std::sort(divisors.begin(), divisors.end());

  std::map<Index, Integer> rhs;
  rhs[1] = 1;
  for (Index m : divisors) {
    if (m == 1) continue;
    Integer acc = 0;
    for (Index d : divisors) {
      if (d < 2 || d > m) continue;
      if (m % d == 0) {
        const Integer& ad = a.coeff(d);
        if (ad != 0) {
          Integer abs_ad = ad < 0 ? Integer(-ad) : ad;
          acc += abs_ad * rhs[m / d];
        }
      }
    }
    rhs[m] = acc;
  }
  return lhs <= rhs[n];
}

}  // namespace pzeta
