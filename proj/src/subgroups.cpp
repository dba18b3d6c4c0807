#include "sst/subgroups.hpp"

#include "sst/errors.hpp"
#include "sst/number_theory.hpp"

namespace sst {

std::vector<SubgroupId> sylow_subgroups(GroupView v, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const auto& out = v.g().sylows(v.ambient, p);
  for (SubgroupId s : out)
    ensure(v.g().lattice().conjugacy_class_of(s) == v.g().lattice().conjugacy_class_of(out.front()) ||
               !v.is_whole(),
           "Sylow subgroups are not conjugate");
  return out;
}

std::vector<SubgroupId> hall_subgroups(GroupView v, const std::set<std::uint64_t>& primes) {
  std::uint64_t target = 1;
  for (auto p : primes) target *= p_part(v.order(), p);
  std::vector<SubgroupId> out;
  v.g().subgroups_of(v.ambient).for_each([&](SubgroupId h) {
    if (v.g().size_of(h) == target) out.push_back(h);
  });
  return out;
}

SubgroupId normalizer(GroupView v, SubgroupId h) {
  return v.g().meet(v.g().normalizer(h), v.ambient);
}

SubgroupId centralizer(GroupView v, const Bitset& s) {
  const Group& g = v.g();
  const auto& t = g.table();
  Bitset out(g.order());
  g.members(v.ambient).for_each([&](Element x) {
    bool central = true;
    s.for_each([&](Element y) {
      if (central && t.mul(x, y) != t.mul(y, x)) central = false;
    });
    if (central) out.set(x);
  });
  return g.id_of(out);
}

SubgroupId center(GroupView v) { return centralizer(v, v.g().members(v.ambient)); }

SubgroupId core(GroupView v, SubgroupId h) {
  const Group& g = v.g();
  SubgroupId out = h;
  g.members(v.ambient).for_each([&](Element x) { out = g.meet(out, g.conjugate(h, x)); });
  return out;
}

SubgroupId relative_normal_closure(const Group& g, SubgroupId h, SubgroupId under) {
  SubgroupId out = h;
  for (;;) {
    SubgroupId next = out;
    g.members(under).for_each([&](Element x) { next = g.join(next, g.conjugate(out, x)); });
    if (next == out) return out;
    out = next;
  }
}

SubgroupId normal_closure(GroupView v, SubgroupId h) {
  return relative_normal_closure(v.g(), h, v.ambient);
}

SubgroupId commutator_subgroup(const Group& g, SubgroupId a, SubgroupId b) {
  return g.commutator(a, b);
}

bool is_normal(GroupView v, SubgroupId h) { return v.g().is_normal_in(h, v.ambient); }

bool is_subnormal(GroupView v, SubgroupId h) {
  const Group& g = v.g();
  SubgroupId current = v.ambient;
  for (;;) {
    const SubgroupId next = relative_normal_closure(g, h, current);
    if (next == current) return current == h;
    current = next;
  }
}

std::vector<SubgroupId> normal_subgroups(GroupView v) {
  std::vector<SubgroupId> out;
  v.g().subgroups_of(v.ambient).for_each([&](SubgroupId h) {
    if (is_normal(v, h)) out.push_back(h);
  });
  return out;
}

std::vector<SubgroupId> maximal_subgroups(GroupView v) {
  const Group& g = v.g();
  std::vector<SubgroupId> out;
  g.subgroups_of(v.ambient).for_each([&](SubgroupId h) {
    if (h == v.ambient) return;
    bool maximal = true;
    g.subgroups_of(v.ambient).for_each([&](SubgroupId k) {
      if (maximal && k != h && k != v.ambient && g.contains(k, h)) maximal = false;
    });
    if (maximal) out.push_back(h);
  });
  return out;
}

std::vector<SubgroupId> supplements(GroupView v, SubgroupId h) {
  const Group& g = v.g();
  std::vector<SubgroupId> out;
  g.subgroups_of(v.ambient).for_each([&](SubgroupId k) {
    if (g.product_size(h, k) == v.order()) out.push_back(k);
  });
  return out;
}

std::vector<SubgroupId> complements(GroupView v, SubgroupId h) {
  const Group& g = v.g();
  std::vector<SubgroupId> out;
  for (SubgroupId k : supplements(v, h))
    if (g.meet(h, k) == g.bottom()) out.push_back(k);
  return out;
}

Bitset product_set(const Group& g, SubgroupId a, SubgroupId b) {
  Bitset out(g.order());
  g.members(a).for_each([&](Element x) {
    g.members(b).for_each([&](Element y) { out.set(g.table().mul(x, y)); });
  });
  return out;
}

bool permutes(const Group& g, SubgroupId a, SubgroupId b) { return g.permutes(a, b); }

bool is_abelian(GroupView v) { return v.g().commutator(v.ambient, v.ambient) == v.g().bottom(); }

bool is_p_group(const Group& g, SubgroupId h) { return is_prime_power(g.size_of(h)); }

std::vector<SubgroupId> prime_power_subgroups(GroupView v) {
  std::vector<SubgroupId> out;
  v.g().subgroups_of(v.ambient).for_each([&](SubgroupId h) {
    if (is_prime_power(v.g().size_of(h))) out.push_back(h);
  });
  return out;
}

bool is_cyclic(const Group& g, SubgroupId h) {
  if (g.lattice()[h].generators.size() <= 1) return true;
  bool cyclic = false;
  g.members(h).for_each([&](Element x) {
    if (!cyclic && element_order(g.table(), x) == g.size_of(h)) cyclic = true;
  });
  return cyclic;
}

std::vector<SubgroupId> cyclic_prime_power_subgroups(GroupView v) {
  std::vector<SubgroupId> out;
  for (SubgroupId h : prime_power_subgroups(v))
    if (is_cyclic(v.g(), h)) out.push_back(h);
  return out;
}

}  // namespace sst
