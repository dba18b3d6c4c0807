#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sst/group.hpp"

namespace sst {

std::vector<SubgroupId> sylow_subgroups(GroupView v, std::uint64_t p);

/// Subgroups whose order is the full `primes`-part of the ambient order.
std::vector<SubgroupId> hall_subgroups(GroupView v, const std::set<std::uint64_t>& primes);

SubgroupId normalizer(GroupView v, SubgroupId h);
/// Elements of the ambient group commuting with every element of s.
SubgroupId centralizer(GroupView v, const Bitset& s);
SubgroupId center(GroupView v);
/// Largest normal subgroup of the ambient group inside h.
SubgroupId core(GroupView v, SubgroupId h);
SubgroupId normal_closure(GroupView v, SubgroupId h);
/// Least subgroup containing h and closed under conjugation by `under`.
SubgroupId relative_normal_closure(const Group& g, SubgroupId h, SubgroupId under);
SubgroupId commutator_subgroup(const Group& g, SubgroupId a, SubgroupId b);

bool is_normal(GroupView v, SubgroupId h);
/// Follows the chain of successive normal closures down from the ambient group.
bool is_subnormal(GroupView v, SubgroupId h);
/// Normal subgroups of the ambient group, ascending ids.
std::vector<SubgroupId> normal_subgroups(GroupView v);

std::vector<SubgroupId> maximal_subgroups(GroupView v);
/// All K with HK equal to the ambient group.
std::vector<SubgroupId> supplements(GroupView v, SubgroupId h);
/// Supplements meeting h trivially.
std::vector<SubgroupId> complements(GroupView v, SubgroupId h);

Bitset product_set(const Group& g, SubgroupId a, SubgroupId b);
bool permutes(const Group& g, SubgroupId a, SubgroupId b);

bool is_abelian(GroupView v);
bool is_p_group(const Group& g, SubgroupId h);
bool is_cyclic(const Group& g, SubgroupId h);
/// Subgroups of the ambient group whose order is a prime power (trivial included).
std::vector<SubgroupId> prime_power_subgroups(GroupView v);
std::vector<SubgroupId> cyclic_prime_power_subgroups(GroupView v);

}  // namespace sst
