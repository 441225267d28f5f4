#include "pzeta/permgroup.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "pzeta/error.hpp"

namespace pzeta {

namespace {

// Full multiplication tables are built up to this order (16 MiB of u32).
constexpr std::int64_t kMulTableMaxOrder = 2048;

}  // namespace

std::string PermGroup::pack(const Perm& p) {
  const auto& img = p.images();
  std::string key(img.size() * 2, '\0');
  for (std::size_t i = 0; i < img.size(); ++i) {
    key[2 * i] = static_cast<char>(img[i] & 0xff);
    key[2 * i + 1] = static_cast<char>(img[i] >> 8);
  }
  return key;
}

std::optional<std::uint32_t> PermGroup::find(const Perm& p) const {
  if (p.degree() != degree_) return std::nullopt;
  auto it = index_.find(pack(p));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t PermGroup::element_index(const Perm& p) const {
  auto idx = find(p);
  if (!idx) throw Error("permutation is not an element of the group");
  return *idx;
}

std::uint32_t PermGroup::product(std::uint32_t i, std::uint32_t j) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(i) * elements_.size() + j];
  return index_.at(pack(elements_[i].compose(elements_[j])));
}

PermGroup close_generators(int degree, const std::vector<Perm>& generators,
                           std::int64_t order_limit) {
  if (degree < 1) throw Error("degree must be >= 1");
  if (order_limit < 1) throw Error("order limit must be >= 1");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error("generator degree does not match the group degree");

  PermGroup out;
  out.degree_ = degree;
  out.generators_ = generators;

  // Breadth-first closure under right multiplication by the generators.
  std::vector<Perm> elems;
  std::unordered_map<std::string, std::uint32_t> seen;
  elems.push_back(Perm::identity(degree));
  seen.emplace(PermGroup::pack(elems[0]), 0);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      Perm next = elems[head].compose(g);
      std::string key = PermGroup::pack(next);
      if (seen.emplace(key, static_cast<std::uint32_t>(elems.size())).second) {
        if (static_cast<std::int64_t>(elems.size()) + 1 > order_limit)
          throw LimitError("group closure exceeds order limit " +
                               std::to_string(order_limit),
                           order_limit);
        elems.push_back(std::move(next));
      }
    }
  }

  std::sort(elems.begin(), elems.end());
  out.elements_ = std::move(elems);
  out.index_.clear();
  for (std::uint32_t i = 0; i < out.elements_.size(); ++i)
    out.index_.emplace(PermGroup::pack(out.elements_[i]), i);
  out.identity_ = out.index_.at(PermGroup::pack(Perm::identity(degree)));

  const std::size_t n = out.elements_.size();
  out.inverse_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i)
    out.inverse_[i] = out.index_.at(PermGroup::pack(out.elements_[i].inverse()));

  if (static_cast<std::int64_t>(n) <= kMulTableMaxOrder) {
    out.mul_table_.resize(n * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        out.mul_table_[static_cast<std::size_t>(i) * n + j] =
            out.index_.at(PermGroup::pack(out.elements_[i].compose(out.elements_[j])));
  }
  return out;
}

std::vector<std::uint32_t> generated_subgroup(
    const PermGroup& g, const std::vector<std::uint32_t>& gens) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  boost::dynamic_bitset<> in_set(n);
  std::vector<std::uint32_t> members;
  members.push_back(g.identity_index());
  in_set.set(g.identity_index());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::uint32_t gen : gens) {
      std::uint32_t next = g.product(members[head], gen);
      if (!in_set.test(next)) {
        in_set.set(next);
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

SubgroupLattice::SubgroupLattice(
    PermGroup group, std::vector<Subgroup> subgroups,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> leq)
    : group_(std::move(group)),
      subgroups_(std::move(subgroups)),
      leq_(std::move(leq)) {}

std::optional<std::uint32_t> SubgroupLattice::find(
    const std::vector<std::uint32_t>& members) const {
  auto cmp = [](const Subgroup& s, const std::vector<std::uint32_t>& m) {
    if (s.members.size() != m.size()) return s.members.size() < m.size();
    return s.members < m;
  };
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), members, cmp);
  if (it != subgroups_.end() && it->members == members)
    return static_cast<std::uint32_t>(it - subgroups_.begin());
  return std::nullopt;
}

namespace {

struct PoolEntry {
  std::vector<std::uint32_t> members;
  boost::dynamic_bitset<> bits;
  std::vector<std::uint32_t> gens;  // small generating set, for joins
};

boost::dynamic_bitset<> bits_of(const std::vector<std::uint32_t>& members,
                                std::size_t n) {
  boost::dynamic_bitset<> b(n);
  for (std::uint32_t m : members) b.set(m);
  return b;
}

// Greedy small generating set: scan members in canonical order, adding any
// element not yet generated. Keeps join generator unions short.
std::vector<std::uint32_t> reduce_generators(const PermGroup& g,
                                             const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> closure = {g.identity_index()};
  boost::dynamic_bitset<> have(static_cast<std::size_t>(g.order()));
  have.set(g.identity_index());
  for (std::uint32_t m : members) {
    if (have.test(m)) continue;
    gens.push_back(m);
    closure = generated_subgroup(g, gens);
    have.reset();
    for (std::uint32_t x : closure) have.set(x);
  }
  return gens;
}

}  // namespace

SubgroupLattice enumerate_subgroups(const PermGroup& g,
                                    std::int64_t lattice_limit) {
  if (g.order() < 1) throw Error("group is empty");
  if (lattice_limit < 1) throw Error("lattice limit must be >= 1");
  const std::size_t n = static_cast<std::size_t>(g.order());

  std::vector<PoolEntry> pool;
  std::map<std::vector<std::uint32_t>, std::uint32_t> known;

  auto add = [&](std::vector<std::uint32_t> members,
                 std::vector<std::uint32_t> gens) -> bool {
    auto it = known.find(members);
    if (it != known.end()) return false;
    if (static_cast<std::int64_t>(pool.size()) + 1 > lattice_limit)
      throw LimitError("subgroup count exceeds lattice limit " +
                           std::to_string(lattice_limit),
                       lattice_limit);
    PoolEntry e;
    e.bits = bits_of(members, n);
    e.gens = std::move(gens);
    e.members = std::move(members);
    known.emplace(e.members, static_cast<std::uint32_t>(pool.size()));
    pool.push_back(std::move(e));
    return true;
  };

  // Cyclic seeds (the identity seeds the trivial subgroup).
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> gens;
    if (i != g.identity_index()) gens.push_back(i);
    std::vector<std::uint32_t> members = generated_subgroup(g, gens);
    add(std::move(members), std::move(gens));
  }

  // Semi-naive join closure: each round only pairs involving a subgroup
  // discovered in the previous round.
  std::size_t prev_size = 0;
  while (true) {
    const std::size_t cur_size = pool.size();
    if (prev_size == cur_size) break;
    for (std::size_t j = prev_size; j < cur_size; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (pool[i].bits.is_subset_of(pool[j].bits) ||
            pool[j].bits.is_subset_of(pool[i].bits))
          continue;
        std::vector<std::uint32_t> gens = pool[i].gens;
        gens.insert(gens.end(), pool[j].gens.begin(), pool[j].gens.end());
        std::vector<std::uint32_t> members = generated_subgroup(g, gens);
        if (known.find(members) == known.end()) {
          std::vector<std::uint32_t> small = reduce_generators(g, members);
          add(std::move(members), std::move(small));
        }
      }
    }
    prev_size = cur_size;
  }

  std::vector<Subgroup> subs;
  subs.reserve(pool.size());
  for (auto& e : pool)
    subs.push_back(Subgroup{std::move(e.members), std::move(e.bits)});
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });

  std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
  for (std::uint32_t i = 0; i < subs.size(); ++i)
    for (std::uint32_t j = 0; j < subs.size(); ++j) {
      if (i == j) continue;
      if (subs[j].order() % subs[i].order() != 0) continue;
      if (subs[i].order() == subs[j].order()) continue;
      if (subs[i].bits.is_subset_of(subs[j].bits)) leq.emplace_back(i, j);
    }
  std::sort(leq.begin(), leq.end());

  return SubgroupLattice(g, std::move(subs), std::move(leq));
}

std::int64_t subgroup_index(const PermGroup& g, const Subgroup& h) {
  if (h.order() < 1 || g.order() % h.order() != 0)
    throw Error("subgroup order does not divide the group order");
  return g.order() / h.order();
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (const auto& gen : g.generators()) {
    const std::uint32_t gi = g.element_index(gen);
    const std::uint32_t gi_inv = g.inverse_of(gi);
    for (std::uint32_t m : h.members) {
      // g m g^{-1}
      std::uint32_t conj = g.product(gi, g.product(m, gi_inv));
      if (!h.bits.test(conj)) return false;
    }
  }
  return true;
}

bool product_covers(const PermGroup& g, const Subgroup& h, const Subgroup& n) {
  if (!is_normal(g, n)) throw Error("product_covers requires a normal N");
  const std::int64_t inter = static_cast<std::int64_t>((h.bits & n.bits).count());
  return h.order() * n.order() == g.order() * inter;
}

PermGroup quotient_group(const PermGroup& g, const Subgroup& n,
                         std::int64_t order_limit) {
  if (!is_normal(g, n)) throw Error("quotient requires a normal subgroup");
  const std::size_t order = static_cast<std::size_t>(g.order());

  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> coset_of(order, kUnassigned);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < order; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const std::uint32_t cid = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (std::uint32_t m : n.members) coset_of[g.product(x, m)] = cid;
  }

  const int q_degree = static_cast<int>(reps.size());
  std::vector<Perm> q_gens;
  for (const auto& gen : g.generators()) {
    const std::uint32_t gi = g.element_index(gen);
    std::vector<Perm::Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      img[c] = static_cast<Perm::Point>(coset_of[g.product(gi, reps[c])]);
    q_gens.push_back(Perm(std::move(img)));
  }

  PermGroup q = close_generators(q_degree, q_gens, order_limit);
  if (q.order() != g.order() / n.order())
    throw Error("coset action closed to the wrong order");  // internal check
  return q;
}

std::string group_hash(const PermGroup& g) {
  std::vector<std::string> gen_keys;
  for (const auto& gen : g.generators()) {
    if (gen.is_identity()) continue;
    std::string key;
    for (auto p : gen.images()) key += std::to_string(p) + ",";
    gen_keys.push_back(std::move(key));
  }
  std::sort(gen_keys.begin(), gen_keys.end());
  gen_keys.erase(std::unique(gen_keys.begin(), gen_keys.end()), gen_keys.end());

  std::string canon = "v1|deg=" + std::to_string(g.degree()) + "|";
  for (const auto& k : gen_keys) canon += k + ";";

  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace pzeta
