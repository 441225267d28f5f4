#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pzeta/dseries.hpp"
#include "pzeta/integer.hpp"
#include "pzeta/moebius.hpp"
#include "pzeta/permgroup.hpp"

namespace pzeta {

struct SeriesRecipe;

/// A group given by generators in cycle notation; its series comes from the
/// enumerated subgroup lattice.
struct LatticeRecipe {
  std::string generators;  // one permutation per line
  int degree = -1;         // -1: inferred from the generators
};

/// Cyclic group C_n. P_{C_n} = sum over squarefree d | n of mu(d)/d^s,
/// which is 1 - 1/p^s for prime n.
struct CyclicRecipe {
  std::int64_t n = 1;
};

/// Elementary abelian C_p^d with the prosoluble product form
/// prod_{i<d} (1 - p^i / p^s).
struct ElementaryAbelianRecipe {
  std::int64_t p = 2;
  int d = 1;
};

/// Leading terms of an alternating group A_m, m >= 9: below index m(m-1)
/// the only contributing subgroups are point stabilizers, 2-set stabilizers
/// and pairwise point-stabilizer intersections. Valid only up to m(m-1).
struct AlternatingTruncatedRecipe {
  std::int64_t m = 9;
};

/// f-th power of a nonabelian simple group S:
/// P_{S^f} = prod_{i=0}^{f-1} (P_S - i*|Aut S| / |S|^s).
/// aut_order and group_order are caller-supplied (|Aut A_m| = m! for m != 6;
/// A_6 is the exception and is never produced by this library).
struct BostonPowerRecipe {
  std::shared_ptr<const SeriesRecipe> base;
  Integer f = 1;
  Integer aut_order = 1;
  Integer group_order = 1;
};

/// Direct product of factors sharing no chief factors; the series is the
/// plain Dirichlet product of the factor series.
struct BrownProductRecipe {
  std::vector<SeriesRecipe> factors;
};

struct SeriesRecipe {
  std::variant<LatticeRecipe, CyclicRecipe, ElementaryAbelianRecipe,
               AlternatingTruncatedRecipe, BostonPowerRecipe, BrownProductRecipe>
      v;
};

DirichletSeries cyclic_series(std::int64_t n, Index bound);
DirichletSeries elementary_abelian_series(std::int64_t p, int d, Index bound);

/// Throws if m < 9 or bound > m(m-1): beyond that index the subgroup
/// classification behind the formula gives no guarantee, so the request is
/// refused rather than silently truncated.
DirichletSeries alternating_truncated_series(std::int64_t m, Index bound);

/// When group_order exceeds the bound of `base` every correction term falls
/// beyond the truncation (its indices are multiples of group_order), and the
/// result is the exact truncated f-th power of `base`; f may then be huge.
/// Otherwise the product is expanded factor by factor with its corrections,
/// which requires a moderate f.
DirichletSeries boston_power_series(const DirichletSeries& base, const Integer& f,
                                    const Integer& aut_order,
                                    const Integer& group_order);

/// Desk-scale stand-in for chief-factor comparison between product factors:
/// abelian chief factors are keyed by their prime, nonabelian ones by their
/// alternating degree when the order is a power of m!/2, and by raw order
/// otherwise. Factors of a Brown product must be pairwise disjoint in all
/// three components.
struct ChiefSignature {
  std::set<std::int64_t> abelian_primes;
  std::set<std::int64_t> alternating_degrees;
  std::set<Integer> other_nonabelian_orders;

  bool disjoint_from(const ChiefSignature& other) const;
  void merge(const ChiefSignature& other);
  std::string describe() const;
};

/// Chief signature of a lattice group, read off a chief series through its
/// normal-subgroup lattice.
ChiefSignature lattice_signature(const SubgroupLattice& lattice);

/// Shared lattice + Möbius data for one group, so that recipe evaluation
/// (and any caller-provided cache) builds each lattice once.
struct LatticeData {
  SubgroupLattice lattice;
  MoebiusTable table;
};

using LatticeProvider =
    std::function<std::shared_ptr<const LatticeData>(const PermGroup&)>;

std::shared_ptr<const LatticeData> build_lattice_data(const PermGroup& g,
                                                      std::int64_t lattice_limit);

struct RecipeEvaluation {
  DirichletSeries series;
  ChiefSignature signature;
};

RecipeEvaluation evaluate_recipe(const SeriesRecipe& recipe, Index bound,
                                 const GroupLimits& limits = {},
                                 const LatticeProvider& provider = {});

/// The series of the group a recipe describes, exact up to `bound`.
DirichletSeries recipe_series(const SeriesRecipe& recipe, Index bound,
                              const GroupLimits& limits = {},
                              const LatticeProvider& provider = {});

/// Natural coefficient range of a recipe: the group order where it is known
/// (lattice, cyclic, elementary abelian), m(m-1) for truncated alternating
/// series. Boston and Brown recipes have no safe default and return nullopt.
std::optional<Index> recipe_default_bound(const SeriesRecipe& recipe,
                                          const GroupLimits& limits = {});

/// The C_2^2 x C_5^2 x A_5 demonstration product whose inverse first goes
/// negative at n = 50000.
SeriesRecipe example_50000_recipe();

/// Inverse coefficients of that product at indices 2^i 5^k, computed by the
/// closed-form recurrence (an independent path from series inversion):
/// c(i,k) = 5 c(i,k-1) + 10 c(i-1,k-1) - 20 c(i-2,k-1) + (2^{i+1}-1)(5^{k+1}-1)/4,
/// out-of-range indices contributing zero.
std::map<std::pair<int, int>, Integer> example_recurrence_coefficients(int i_max,
                                                                       int k_max);

}  // namespace pzeta
