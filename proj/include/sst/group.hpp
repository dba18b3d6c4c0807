#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "sst/bitset.hpp"
#include "sst/group_table.hpp"
#include "sst/lattice.hpp"

namespace sst {

/// A group table together with its subgroup lattice and memoized lattice
/// operations.
///
/// The table and lattice are immutable; the memo tables fill lazily, so one
/// Group must not be queried from several threads at once. Distinct Group
/// objects are independent.
class Group {
 public:
  /// Upper bound on the lattice size; the memo tables are dense.
  static constexpr std::size_t kMaxSubgroups = 2048;

  explicit Group(GroupTable table, std::size_t cap = kDefaultOrderCap);
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;
  Group(Group&&) noexcept;
  Group& operator=(Group&&) noexcept;
  ~Group();

  const GroupTable& table() const { return table_; }
  const SubgroupLattice& lattice() const { return lattice_; }
  const std::string& name() const { return table_.name(); }
  std::size_t order() const { return table_.order(); }
  std::size_t cap() const { return cap_; }
  std::size_t subgroup_count() const { return lattice_.size(); }

  SubgroupId top() const { return lattice_.whole(); }
  SubgroupId bottom() const { return lattice_.trivial(); }
  std::size_t size_of(SubgroupId h) const { return lattice_[h].order; }
  const Bitset& members(SubgroupId h) const { return lattice_[h].members; }
  bool contains(SubgroupId outer, SubgroupId inner) const { return lattice_.contains(outer, inner); }
  const Bitset& subgroups_of(SubgroupId k) const { return lattice_.subgroups_of(k); }
  SubgroupId id_of(const Bitset& members) const { return lattice_.id_of(members); }

  SubgroupId generated(std::span<const Element> seed) const;
  SubgroupId cyclic(Element x) const { return generated(std::span<const Element>(&x, 1)); }

  SubgroupId join(SubgroupId a, SubgroupId b) const;
  SubgroupId meet(SubgroupId a, SubgroupId b) const;
  /// x^-1 H x
  SubgroupId conjugate(SubgroupId h, Element x) const { return lattice_.conjugate(h, x); }
  /// N_G(H) in the whole group.
  SubgroupId normalizer(SubgroupId h) const;
  /// Subgroup generated by all [a, b] = a^-1 b^-1 a b.
  SubgroupId commutator(SubgroupId a, SubgroupId b) const;
  /// HX = XH as element sets.
  bool permutes(SubgroupId a, SubgroupId b) const;
  /// |HX| computed from orders.
  std::size_t product_size(SubgroupId a, SubgroupId b) const {
    return size_of(a) * size_of(b) / size_of(meet(a, b));
  }
  /// H is a normal subgroup of K.
  bool is_normal_in(SubgroupId h, SubgroupId k) const {
    return contains(k, h) && contains(normalizer(h), k);
  }

  /// Prime divisors of |K| in ascending order.
  std::vector<std::uint64_t> primes_of(SubgroupId k) const;
  /// Syl_p(K), ascending ids. Empty when p does not divide |K|.
  const std::vector<SubgroupId>& sylows(SubgroupId k, std::uint64_t p) const;
  /// Sylow subgroups of K for every prime divisor of |K|.
  const std::vector<SubgroupId>& all_sylows(SubgroupId k) const;

  struct Quotient {
    std::unique_ptr<Group> group;
    std::vector<Element> projection;
    SubgroupId kernel = 0;
  };
  /// G/N, built once per normal subgroup. Throws NotNormal.
  const Quotient& quotient(SubgroupId n) const;
  /// HN/N as a subgroup of the quotient.
  SubgroupId image(const Quotient& q, SubgroupId h) const;
  /// Full preimage of a quotient subgroup.
  SubgroupId preimage(const Quotient& q, SubgroupId qh) const;

  /// Memo cell for a predicate evaluated on (subject, ambient).
  struct Memo {
    std::int8_t state = -1;
    SubgroupId a = 0;
    SubgroupId b = 0;
  };
  static constexpr std::size_t kMemoTables = 16;
  Memo& memo(std::size_t table, SubgroupId subject, SubgroupId ambient) const;

 private:
  static constexpr SubgroupId kUnknown = ~SubgroupId{0};

  GroupTable table_;
  SubgroupLattice lattice_;
  std::size_t cap_;

  mutable std::vector<SubgroupId> join_;
  mutable std::vector<SubgroupId> meet_;
  mutable std::vector<SubgroupId> commutator_;
  mutable std::vector<std::int8_t> permutes_;
  mutable std::vector<SubgroupId> normalizer_;
  mutable std::map<std::pair<SubgroupId, std::uint64_t>, std::vector<SubgroupId>> sylows_;
  mutable std::map<SubgroupId, std::vector<SubgroupId>> all_sylows_;
  mutable std::map<SubgroupId, Quotient> quotients_;
  mutable std::array<std::vector<Memo>, kMemoTables> memos_;
};

/// A subgroup of a Group regarded as a group in its own right.
///
/// Every query taking a GroupView works relative to the ambient subgroup:
/// "Sylow subgroups", "normal", "supplement" and so on are all read inside it.
struct GroupView {
  const Group* group;
  SubgroupId ambient;

  GroupView(const Group& g) : group(&g), ambient(g.top()) {}  // NOLINT: implicit by intent
  GroupView(const Group& g, SubgroupId a) : group(&g), ambient(a) {}

  const Group& g() const { return *group; }
  std::size_t order() const { return group->size_of(ambient); }
  bool is_whole() const { return ambient == group->top(); }
  GroupView within(SubgroupId k) const { return GroupView(*group, k); }
};

}  // namespace sst
