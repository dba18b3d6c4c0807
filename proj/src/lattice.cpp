#include "sst/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sst/errors.hpp"

namespace sst {

namespace {

/// Closure of `start` (already a subgroup) and the extra generators.
Bitset close(const GroupTable& g, const Bitset& start, const std::vector<Element>& gens) {
  Bitset members = start;
  std::vector<Element> queue = members.to_vector();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element u = queue[i];
    for (Element s : gens) {
      const Element v = g.mul(u, s);
      if (!members.test(v)) {
        members.set(v);
        queue.push_back(v);
      }
    }
  }
  return members;
}

}  // namespace

Bitset generated_subgroup(const GroupTable& g, std::span<const Element> seed) {
  Bitset identity(g.order());
  identity.set(0);
  return close(g, identity, std::vector<Element>(seed.begin(), seed.end()));
}

bool is_subgroup(const GroupTable& g, const Bitset& members) {
  if (!members.test(0)) return false;
  bool closed = true;
  members.for_each([&](Element a) {
    if (!closed) return;
    members.for_each([&](Element b) {
      if (closed && !members.test(g.mul(a, b))) closed = false;
    });
  });
  return closed;
}

std::optional<SubgroupId> SubgroupLattice::find(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const Bitset& members) const {
  auto id = find(members);
  if (!id) throw NotSubgroup("member set is not a subgroup");
  return *id;
}

std::vector<std::pair<SubgroupId, SubgroupId>> SubgroupLattice::covers() const {
  std::vector<std::pair<SubgroupId, SubgroupId>> out;
  for (SubgroupId k = 0; k < size(); ++k) {
    below_[k].for_each([&](SubgroupId h) {
      if (h == k) return;
      bool maximal = true;
      below_[k].for_each([&](SubgroupId m) {
        if (maximal && m != h && m != k && below_[m].test(h)) maximal = false;
      });
      if (maximal) out.emplace_back(h, k);
    });
  }
  return out;
}

SubgroupLattice all_subgroups(const GroupTable& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw OrderCapExceeded("lattice of a group of order " + std::to_string(n) +
                           " exceeds the cap " + std::to_string(cap));

  std::vector<Subgroup> found;
  std::unordered_map<Bitset, SubgroupId, BitsetHash> index;
  auto insert = [&](Bitset members, std::vector<Element> gens) -> bool {
    if (index.count(members)) return false;
    const auto id = static_cast<SubgroupId>(found.size());
    index.emplace(members, id);
    const std::size_t order = members.count();
    ensure(n % order == 0, "subgroup order violates Lagrange");
    found.push_back({std::move(members), order, std::move(gens)});
    return true;
  };

  // cyclic subgroups, keeping one generator per subgroup
  Bitset trivial(n);
  trivial.set(0);
  insert(trivial, {});
  std::vector<Element> cyclic_reps;
  for (Element x = 1; x < n; ++x) {
    if (insert(generated_subgroup(g, std::span<const Element>(&x, 1)), {x})) cyclic_reps.push_back(x);
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x : cyclic_reps) {
      if (found[i].members.test(x)) continue;
      std::vector<Element> gens = found[i].generators;
      gens.push_back(x);
      Bitset members = close(g, found[i].members, gens);
      insert(std::move(members), std::move(gens));
    }
  }

  std::vector<SubgroupId> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](SubgroupId a, SubgroupId b) {
    if (found[a].order != found[b].order) return found[a].order < found[b].order;
    return Bitset::lex_less(found[a].members, found[b].members);
  });

  SubgroupLattice lat;
  lat.group_order_ = n;
  for (SubgroupId id : order) lat.subgroups_.push_back(std::move(found[id]));
  const std::size_t count = lat.subgroups_.size();
  for (SubgroupId id = 0; id < count; ++id) lat.index_.emplace(lat.subgroups_[id].members, id);

  lat.below_.assign(count, Bitset(count));
  for (SubgroupId k = 0; k < count; ++k) {
    const auto& big = lat.subgroups_[k];
    for (SubgroupId h = 0; h <= k; ++h) {
      const auto& small = lat.subgroups_[h];
      if (big.order % small.order == 0 && small.members.is_subset_of(big.members))
        lat.below_[k].set(h);
    }
  }

  lat.conj_.assign(count * n, 0);
  for (SubgroupId h = 0; h < count; ++h) {
    const std::vector<Element> elems = lat.subgroups_[h].members.to_vector();
    for (Element x = 0; x < n; ++x) {
      Bitset image(n);
      for (Element e : elems) image.set(g.conj(e, x));
      lat.conj_[h * n + x] = lat.index_.at(image);
    }
  }

  lat.class_of_.assign(count, count);
  for (SubgroupId h = 0; h < count; ++h) {
    if (lat.class_of_[h] != count) continue;
    std::vector<SubgroupId> cls;
    for (Element x = 0; x < n; ++x) {
      const SubgroupId c = lat.conj_[h * n + x];
      if (lat.class_of_[c] == count) {
        lat.class_of_[c] = lat.classes_.size();
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    lat.classes_.push_back(std::move(cls));
  }
  return lat;
}

}  // namespace sst
