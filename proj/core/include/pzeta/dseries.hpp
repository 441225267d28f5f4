#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pzeta/integer.hpp"

namespace pzeta {

/// Truncated formal Dirichlet series with exact integer coefficients.
///
/// Coefficients are defined for every index in [1, bound] and undefined
/// beyond; querying past the bound is an error, not zero. Only nonzero
/// terms are stored, keyed by index in ascending order. Values are
/// immutable after construction, so instances can be shared across threads.
class DirichletSeries {
 public:
  /// Zero series of bound 1 (useful as a container default only).
  DirichletSeries() = default;

  /// The multiplicative identity 1, truncated at `bound`.
  static DirichletSeries unit(Index bound);

  /// Builds a series from (index, coefficient) pairs. Zero coefficients are
  /// dropped. Throws on bound < 1, duplicate indices, or indices outside
  /// [1, bound].
  static DirichletSeries make(const std::vector<std::pair<Index, Integer>>& pairs,
                              Index bound);

  Index bound() const { return bound_; }

  /// Nonzero terms in ascending index order.
  const std::map<Index, Integer>& terms() const { return terms_; }

  /// Coefficient at n. Throws if n is outside [1, bound].
  const Integer& coeff(Index n) const;

  /// True iff the coefficient at n = 1 equals 1 (inversion precondition).
  bool unital() const;

  bool operator==(const DirichletSeries& other) const = default;

 private:
  DirichletSeries(Index bound, std::map<Index, Integer> terms)
      : bound_(bound), terms_(std::move(terms)) {}

  Index bound_ = 1;
  std::map<Index, Integer> terms_;

  friend DirichletSeries mul(const DirichletSeries&, const DirichletSeries&);
  friend DirichletSeries invert(const DirichletSeries&);
  friend DirichletSeries restricted(const DirichletSeries&, Index);
};

/// Dirichlet product: coefficient at n is sum over d|n of A[d]*B[n/d].
/// The result bound is min(A.bound, B.bound), which loses nothing: every
/// product of stored indices landing at or below that bound is covered.
DirichletSeries mul(const DirichletSeries& a, const DirichletSeries& b);

/// Formal inverse of a unital series, computed by the recurrence
/// c_n = -sum over proper divisor splits of a_r * c_{n/r}, visiting only
/// divisors present in the input's support. Throws on non-unital input.
DirichletSeries invert(const DirichletSeries& a);

/// Truncated e-th power by binary exponentiation; e >= 0, e may be huge.
DirichletSeries pow_truncated(const DirichletSeries& a, const Integer& e);

/// Same series with a smaller bound. Throws if new_bound exceeds the
/// current bound (that would fabricate coefficients) or is < 1.
DirichletSeries restricted(const DirichletSeries& a, Index new_bound);

/// Smallest index with a negative coefficient, with its value.
std::optional<std::pair<Index, Integer>> first_negative(const DirichletSeries& a);

/// An ordered factorization n = n_1 * ... * n_t with every part >= 2.
struct OrderedFactorization {
  std::vector<Index> parts;

  bool operator==(const OrderedFactorization& other) const = default;
};

/// All ordered factorizations of n into parts >= 2, in lexicographic order.
/// Throws for n < 2. The count never exceeds n^2.
std::vector<OrderedFactorization> ordered_factorizations(Index n);

/// Number of ordered factorizations of n into parts >= 2, without
/// materializing them (divisor recursion). n = 1 counts the empty product.
std::uint64_t ordered_factorization_count(Index n);

/// Checks |invert(A)[n]| <= sum over ordered factorizations n_1...n_t of n
/// of |A[n_1] * ... * A[n_t]|. Requires A unital and n <= A.bound. For
/// n = 1 the empty factorization makes both sides 1.
bool coefficient_bound_check(const DirichletSeries& a, Index n);

}  // namespace pzeta
