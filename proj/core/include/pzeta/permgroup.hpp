#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pzeta/perm.hpp"

namespace pzeta {

struct GroupLimits {
  std::int64_t order_limit = 10000;
  std::int64_t lattice_limit = 100000;
};

/// A finite permutation group with its element list fully enumerated and
/// canonically sorted (lexicographic on image arrays). Immutable after
/// construction; safe to share across threads.
///
/// Element arithmetic works on indices into the canonical list. For orders
/// up to a small threshold a full multiplication table is precomputed,
/// which is what makes exhaustive lattice work fast; larger groups (e.g.
/// order-3600 direct products) fall back to composing and hashing, which
/// works but is noticeably slower.
class PermGroup {
 public:
  PermGroup() = default;

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }

  std::uint32_t identity_index() const { return identity_; }
  std::optional<std::uint32_t> find(const Perm& p) const;
  std::uint32_t element_index(const Perm& p) const;  // throws if absent

  /// Index of elements[i] composed with elements[j] (j applied first).
  std::uint32_t product(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse_of(std::uint32_t i) const { return inverse_[i]; }

 private:
  friend PermGroup close_generators(int, const std::vector<Perm>&, std::int64_t);

  static std::string pack(const Perm& p);

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<std::uint32_t> inverse_;
  std::uint32_t identity_ = 0;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> mul_table_;  // order x order when small enough
};

/// Closes `generators` under composition, starting from the identity.
/// Deterministic: the element list is sorted canonically. Throws LimitError
/// (with the limit) if the closure exceeds `order_limit`.
PermGroup close_generators(int degree, const std::vector<Perm>& generators,
                           std::int64_t order_limit = 10000);

/// A subgroup of an enumerated parent group: membership flags plus the
/// sorted member index list (the subgroup's canonical fingerprint).
struct Subgroup {
  std::vector<std::uint32_t> members;  // sorted ascending
  boost::dynamic_bitset<> bits;        // size = parent order

  std::int64_t order() const { return static_cast<std::int64_t>(members.size()); }
};

/// All subgroups of a group, sorted by (order, fingerprint), with the strict
/// inclusion relation materialized. Contains the trivial subgroup and the
/// whole group, and is closed under pairwise intersection (it holds *every*
/// subgroup).
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  SubgroupLattice(PermGroup group, std::vector<Subgroup> subgroups,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>> leq);

  const PermGroup& group() const { return group_; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }

  /// Strict inclusions (i, j): subgroups[i] is a proper subgroup of
  /// subgroups[j]. Sorted; i < j always holds under the canonical order.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& leq() const {
    return leq_;
  }

  std::uint32_t bottom() const { return 0; }
  std::uint32_t top() const { return static_cast<std::uint32_t>(subgroups_.size() - 1); }

  std::optional<std::uint32_t> find(const std::vector<std::uint32_t>& members) const;

 private:
  PermGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> leq_;
};

/// Exhaustive subgroup enumeration: seed with all cyclic subgroups, close
/// under pairwise join (subgroup generated by the union) until stable. Every
/// subgroup is the join of its cyclic subgroups, so this is complete.
/// Throws LimitError if more than `lattice_limit` subgroups appear.
SubgroupLattice enumerate_subgroups(const PermGroup& g,
                                    std::int64_t lattice_limit = 100000);

/// Sorted member indices of the subgroup generated by the given elements.
std::vector<std::uint32_t> generated_subgroup(const PermGroup& g,
                                              const std::vector<std::uint32_t>& gens);

std::int64_t subgroup_index(const PermGroup& g, const Subgroup& h);

/// True iff conjugation by every generator fixes H setwise.
bool is_normal(const PermGroup& g, const Subgroup& h);

/// True iff HN = G, by the order formula |H||N| / |H∩N| = |G|.
/// Throws if N is not normal.
bool product_covers(const PermGroup& g, const Subgroup& h, const Subgroup& n);

/// G/N as a permutation group of degree |G:N|, realized by the left action
/// on left cosets. Throws if N is not normal.
PermGroup quotient_group(const PermGroup& g, const Subgroup& n,
                         std::int64_t order_limit = 10000);

/// Content hash (FNV-1a, 16 hex digits) of the canonical generator list:
/// degree plus the sorted, deduplicated image arrays of the non-identity
/// generators. Used to key the lattice cache.
std::string group_hash(const PermGroup& g);

}  // namespace pzeta
