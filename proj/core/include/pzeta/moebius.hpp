#pragma once

#include <cstdint>
#include <vector>

#include "pzeta/dseries.hpp"
#include "pzeta/integer.hpp"
#include "pzeta/permgroup.hpp"

namespace pzeta {

/// Möbius values over a subgroup lattice, indexed by subgroup position.
/// Construction verifies the defining interval sums and that every subgroup
/// with a nonzero value is an intersection of maximal subgroups.
struct MoebiusTable {
  std::vector<Integer> values;       // mu(H, G) per lattice position
  std::vector<std::int64_t> orders;  // subgroup orders, copied for queries
  std::int64_t group_order = 1;

  const Integer& mu(std::size_t position) const { return values[position]; }
};

/// Top-down recursion mu(G,G) = 1, mu(H,G) = -sum of mu over strict
/// supergroups of H.
MoebiusTable moebius_table(const SubgroupLattice& lattice);

/// a_n = sum of mu(H,G) over subgroups of index n, for n up to `bound`.
DirichletSeries group_series(const MoebiusTable& table, Index bound);
DirichletSeries group_series(const SubgroupLattice& lattice, Index bound);

/// Relative series: only subgroups H with HN = G contribute. N is given by
/// lattice position and must be normal. With N trivial the condition forces
/// H = G and the result degenerates to the unit series.
DirichletSeries relative_series(const SubgroupLattice& lattice,
                                const MoebiusTable& table,
                                std::uint32_t n_position, Index bound);
DirichletSeries relative_series(const SubgroupLattice& lattice,
                                std::uint32_t n_position, Index bound);

/// b_n: number of index-n subgroups with nonzero Möbius value.
std::int64_t b_count(const MoebiusTable& table, Index n);

/// Verifies P_G = P_{G/N} * P_{G,N} up to `bound`, building G/N by its
/// coset action and enumerating its lattice from scratch.
bool quotient_factorization_check(const SubgroupLattice& lattice,
                                  std::uint32_t n_position, Index bound,
                                  const GroupLimits& limits = {});

}  // namespace pzeta
