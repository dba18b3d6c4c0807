#include "sst/group.hpp"

#include "sst/constructions.hpp"
#include "sst/errors.hpp"
#include "sst/number_theory.hpp"

namespace sst {

Group::Group(GroupTable table, std::size_t cap)
    : table_(std::move(table)), lattice_(all_subgroups(table_, cap)), cap_(cap) {
  const std::size_t n = lattice_.size();
  if (n > kMaxSubgroups)
    throw OrderCapExceeded(table_.name() + " has " + std::to_string(n) +
                           " subgroups, above the supported " + std::to_string(kMaxSubgroups));
  join_.assign(n * n, kUnknown);
  meet_.assign(n * n, kUnknown);
  commutator_.assign(n * n, kUnknown);
  permutes_.assign(n * n, -1);
  normalizer_.assign(n, kUnknown);
}

Group::Group(Group&&) noexcept = default;
Group& Group::operator=(Group&&) noexcept = default;
Group::~Group() = default;

SubgroupId Group::generated(std::span<const Element> seed) const {
  return lattice_.id_of(generated_subgroup(table_, seed));
}

SubgroupId Group::join(SubgroupId a, SubgroupId b) const {
  if (contains(a, b)) return a;
  if (contains(b, a)) return b;
  SubgroupId& slot = join_[a * lattice_.size() + b];
  if (slot != kUnknown) return slot;
  std::vector<Element> gens = lattice_[a].generators;
  gens.insert(gens.end(), lattice_[b].generators.begin(), lattice_[b].generators.end());
  slot = generated(gens);
  join_[b * lattice_.size() + a] = slot;
  return slot;
}

SubgroupId Group::meet(SubgroupId a, SubgroupId b) const {
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;
  SubgroupId& slot = meet_[a * lattice_.size() + b];
  if (slot != kUnknown) return slot;
  slot = lattice_.id_of(members(a) & members(b));
  meet_[b * lattice_.size() + a] = slot;
  return slot;
}

SubgroupId Group::normalizer(SubgroupId h) const {
  SubgroupId& slot = normalizer_[h];
  if (slot != kUnknown) return slot;
  Bitset elems(order());
  for (Element x = 0; x < order(); ++x)
    if (lattice_.conjugate(h, x) == h) elems.set(x);
  slot = lattice_.id_of(elems);
  return slot;
}

SubgroupId Group::commutator(SubgroupId a, SubgroupId b) const {
  SubgroupId& slot = commutator_[a * lattice_.size() + b];
  if (slot != kUnknown) return slot;
  std::vector<Element> comms;
  Bitset seen(order());
  members(a).for_each([&](Element x) {
    members(b).for_each([&](Element y) {
      const Element c = table_.commutator(x, y);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    });
  });
  slot = generated(comms);
  // [A,B] = [B,A]
  commutator_[b * lattice_.size() + a] = slot;
  return slot;
}

bool Group::permutes(SubgroupId a, SubgroupId b) const {
  if (contains(a, b) || contains(b, a)) return true;
  std::int8_t& slot = permutes_[a * lattice_.size() + b];
  if (slot >= 0) return slot != 0;
  Bitset ab(order());
  members(a).for_each([&](Element x) {
    members(b).for_each([&](Element y) { ab.set(table_.mul(x, y)); });
  });
  bool equal = true;
  members(b).for_each([&](Element y) {
    if (!equal) return;
    members(a).for_each([&](Element x) {
      if (equal && !ab.test(table_.mul(y, x))) equal = false;
    });
  });
  if (equal) ensure(lattice_.find(ab).has_value(), "permuting product is not a subgroup");
  slot = equal ? 1 : 0;
  permutes_[b * lattice_.size() + a] = slot;
  return equal;
}

std::vector<std::uint64_t> Group::primes_of(SubgroupId k) const { return prime_divisors(size_of(k)); }

const std::vector<SubgroupId>& Group::sylows(SubgroupId k, std::uint64_t p) const {
  auto key = std::make_pair(k, p);
  auto it = sylows_.find(key);
  if (it != sylows_.end()) return it->second;
  const std::size_t target = p_part(size_of(k), p);
  std::vector<SubgroupId> out;
  if (target > 1) {
    subgroups_of(k).for_each([&](SubgroupId h) {
      if (size_of(h) == target) out.push_back(h);
    });
    ensure(!out.empty(), "Sylow subgroup missing");
    ensure(out.size() % p == 1 % p, "Sylow count is not 1 mod p");
    ensure(size_of(k) % out.size() == 0, "Sylow count does not divide the order");
  }
  return sylows_.emplace(key, std::move(out)).first->second;
}

const std::vector<SubgroupId>& Group::all_sylows(SubgroupId k) const {
  auto it = all_sylows_.find(k);
  if (it != all_sylows_.end()) return it->second;
  std::vector<SubgroupId> out;
  for (auto p : primes_of(k)) {
    const auto& s = sylows(k, p);
    out.insert(out.end(), s.begin(), s.end());
  }
  return all_sylows_.emplace(k, std::move(out)).first->second;
}

const Group::Quotient& Group::quotient(SubgroupId n) const {
  auto it = quotients_.find(n);
  if (it != quotients_.end()) return it->second;
  QuotientResult q = sst::quotient(table_, members(n));
  q.table.set_name(name() + "/N" + std::to_string(size_of(n)));
  Quotient out;
  out.group = std::make_unique<Group>(std::move(q.table), cap_);
  out.projection = std::move(q.projection);
  out.kernel = n;
  return quotients_.emplace(n, std::move(out)).first->second;
}

SubgroupId Group::image(const Quotient& q, SubgroupId h) const {
  Bitset img(q.group->order());
  members(h).for_each([&](Element x) { img.set(q.projection[x]); });
  return q.group->id_of(img);
}

SubgroupId Group::preimage(const Quotient& q, SubgroupId qh) const {
  Bitset pre(order());
  for (Element x = 0; x < order(); ++x)
    if (q.group->members(qh).test(q.projection[x])) pre.set(x);
  return id_of(pre);
}

Group::Memo& Group::memo(std::size_t table, SubgroupId subject, SubgroupId ambient) const {
  auto& cells = memos_[table];
  const std::size_t n = lattice_.size();
  if (cells.empty()) cells.resize(n * n);
  return cells[subject * n + ambient];
}

}  // namespace sst
