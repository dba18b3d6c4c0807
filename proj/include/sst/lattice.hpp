#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "sst/bitset.hpp"
#include "sst/constructions.hpp"
#include "sst/group_table.hpp"

namespace sst {

/// Index of a subgroup in the canonical order of its lattice.
using SubgroupId = std::uint32_t;

struct Subgroup {
  Bitset members;
  std::size_t order = 0;
  /// A generating set, as discovered during enumeration.
  std::vector<Element> generators;
};

/// Least subgroup containing the seed elements.
Bitset generated_subgroup(const GroupTable& g, std::span<const Element> seed);

/// True iff the member set is a subgroup (contains 1, closed under products).
bool is_subgroup(const GroupTable& g, const Bitset& members);

/// Every subgroup of a group, sorted by order and then lexicographically by
/// member list. Id 0 is the trivial subgroup and the last id is the group.
/// Immutable after construction.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;

  std::size_t size() const { return subgroups_.size(); }
  std::size_t group_order() const { return group_order_; }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return static_cast<SubgroupId>(subgroups_.size() - 1); }

  std::optional<SubgroupId> find(const Bitset& members) const;
  /// Throws NotSubgroup when the member set is not in the lattice.
  SubgroupId id_of(const Bitset& members) const;

  /// Ids of all subgroups contained in k (including k).
  const Bitset& subgroups_of(SubgroupId k) const { return below_[k]; }
  bool contains(SubgroupId outer, SubgroupId inner) const { return below_[outer].test(inner); }

  /// x^-1 H x
  SubgroupId conjugate(SubgroupId h, Element x) const { return conj_[h * group_order_ + x]; }

  const std::vector<std::vector<SubgroupId>>& conjugacy_classes() const { return classes_; }
  std::size_t conjugacy_class_of(SubgroupId h) const { return class_of_[h]; }

  /// Pairs (H, K) with H a maximal subgroup of K.
  std::vector<std::pair<SubgroupId, SubgroupId>> covers() const;

 private:
  friend SubgroupLattice all_subgroups(const GroupTable& g, std::size_t cap);

  std::size_t group_order_ = 0;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<Bitset, SubgroupId, BitsetHash> index_;
  std::vector<Bitset> below_;
  std::vector<SubgroupId> conj_;
  std::vector<std::vector<SubgroupId>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Breadth-first closure from the cyclic subgroups. Throws OrderCapExceeded.
SubgroupLattice all_subgroups(const GroupTable& g, std::size_t cap = kDefaultOrderCap);

}  // namespace sst
