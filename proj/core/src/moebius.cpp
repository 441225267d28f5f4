#include "pzeta/moebius.hpp"

#include <algorithm>
#include <map>

#include "pzeta/error.hpp"

namespace pzeta {

namespace {

// Strict supersets per lattice position.
std::vector<std::vector<std::uint32_t>> superset_lists(const SubgroupLattice& l) {
  std::vector<std::vector<std::uint32_t>> up(l.size());
  for (const auto& [i, j] : l.leq()) up[i].push_back(j);
  return up;
}

void verify_interval_sums(const SubgroupLattice& l, const MoebiusTable& t,
                          const std::vector<std::vector<std::uint32_t>>& up) {
  for (std::uint32_t h = 0; h < l.size(); ++h) {
    if (h == l.top()) continue;
    Integer sum = t.values[h];
    for (std::uint32_t k : up[h]) sum += t.values[k];
    if (sum != 0) throw Error("Moebius interval sum is nonzero (internal bug)");
  }
}

// Subgroups with nonzero mu must be intersections of maximal subgroups.
void verify_maximal_intersections(const SubgroupLattice& l, const MoebiusTable& t,
                                  const std::vector<std::vector<std::uint32_t>>& up) {
  const std::uint32_t top = l.top();
  std::vector<std::uint32_t> family;  // positions, closed under intersection
  family.push_back(top);
  for (std::uint32_t h = 0; h < l.size(); ++h)
    if (h != top && up[h].size() == 1 && up[h][0] == top) family.push_back(h);

  std::vector<bool> in_family(l.size(), false);
  for (std::uint32_t f : family) in_family[f] = true;

  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      auto bits = l.subgroups()[family[a]].bits & l.subgroups()[family[b]].bits;
      std::vector<std::uint32_t> members;
      for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos;
           i = bits.find_next(i))
        members.push_back(static_cast<std::uint32_t>(i));
      auto pos = l.find(members);
      if (!pos) throw Error("lattice is not intersection-closed (internal bug)");
      if (!in_family[*pos]) {
        in_family[*pos] = true;
        family.push_back(*pos);
      }
    }
  }

  for (std::uint32_t h = 0; h < l.size(); ++h)
    if (t.values[h] != 0 && !in_family[h])
      throw Error("nonzero Moebius value outside maximal-intersection family");
}

}  // namespace

MoebiusTable moebius_table(const SubgroupLattice& lattice) {
  if (lattice.size() == 0) throw Error("empty lattice");
  const auto up = superset_lists(lattice);

  MoebiusTable t;
  t.group_order = lattice.group().order();
  t.orders.reserve(lattice.size());
  for (const auto& s : lattice.subgroups()) t.orders.push_back(s.order());
  t.values.assign(lattice.size(), 0);

  // Canonical order is ascending in subgroup order, so iterating backwards
  // visits every strict superset before the subgroup itself.
  t.values[lattice.top()] = 1;
  for (std::uint32_t h = lattice.top(); h-- > 0;) {
    Integer sum = 0;
    for (std::uint32_t k : up[h]) sum += t.values[k];
    t.values[h] = -sum;
  }

  verify_interval_sums(lattice, t, up);
  verify_maximal_intersections(lattice, t, up);
  return t;
}

DirichletSeries group_series(const MoebiusTable& table, Index bound) {
  if (bound < 1) throw Error("series bound must be >= 1");
  std::map<Index, Integer> acc;
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    if (table.values[i] == 0) continue;
    const Index n = table.group_order / table.orders[i];
    if (n <= bound) acc[n] += table.values[i];
  }
  std::vector<std::pair<Index, Integer>> pairs(acc.begin(), acc.end());
  return DirichletSeries::make(pairs, bound);
}

DirichletSeries group_series(const SubgroupLattice& lattice, Index bound) {
  return group_series(moebius_table(lattice), bound);
}

DirichletSeries relative_series(const SubgroupLattice& lattice,
                                const MoebiusTable& table,
                                std::uint32_t n_position, Index bound) {
  if (bound < 1) throw Error("series bound must be >= 1");
  if (n_position >= lattice.size()) throw Error("no such subgroup position");
  const auto& g = lattice.group();
  const auto& n_sub = lattice.subgroups()[n_position];
  if (!is_normal(g, n_sub)) throw Error("relative series requires a normal N");

  std::map<Index, Integer> acc;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (table.values[i] == 0) continue;
    const auto& h = lattice.subgroups()[i];
    const std::int64_t inter =
        static_cast<std::int64_t>((h.bits & n_sub.bits).count());
    if (h.order() * n_sub.order() != g.order() * inter) continue;  // HN < G
    const Index idx = table.group_order / table.orders[i];
    if (idx <= bound) acc[idx] += table.values[i];
  }
  std::vector<std::pair<Index, Integer>> pairs(acc.begin(), acc.end());
  return DirichletSeries::make(pairs, bound);
}

DirichletSeries relative_series(const SubgroupLattice& lattice,
                                std::uint32_t n_position, Index bound) {
  return relative_series(lattice, moebius_table(lattice), n_position, bound);
}

std::int64_t b_count(const MoebiusTable& table, Index n) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < table.values.size(); ++i)
    if (table.values[i] != 0 && table.group_order / table.orders[i] == n &&
        table.group_order % table.orders[i] == 0)
      ++count;
  return count;
}

bool quotient_factorization_check(const SubgroupLattice& lattice,
                                  std::uint32_t n_position, Index bound,
                                  const GroupLimits& limits) {
  if (n_position >= lattice.size()) throw Error("no such subgroup position");
  const MoebiusTable table = moebius_table(lattice);
  const DirichletSeries whole = group_series(table, bound);
  const DirichletSeries rel = relative_series(lattice, table, n_position, bound);

  PermGroup quotient = quotient_group(lattice.group(),
                                      lattice.subgroups()[n_position],
                                      limits.order_limit);
  SubgroupLattice q_lattice = enumerate_subgroups(quotient, limits.lattice_limit);
  const DirichletSeries q_series = group_series(q_lattice, bound);

  return whole == mul(q_series, rel);
}

}  // namespace pzeta
