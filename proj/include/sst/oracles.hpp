#pragma once

#include <cstdint>
#include <vector>

#include "sst/bitset.hpp"
#include "sst/group.hpp"

namespace sst {

/// Every subset of the group that is closed under products, by exhaustive
/// filtering of the powerset. Only for orders up to kPowersetLimit.
inline constexpr std::size_t kPowersetLimit = 16;
std::vector<Bitset> powerset_subgroups(const GroupTable& g);

/// Subgroups as the closure of the cyclic subgroups under pairwise joins,
/// joins computed directly from member sets.
std::vector<Bitset> join_closure_subgroups(const GroupTable& g);

/// Member sets of the lattice equal the oracle (as sets).
bool lattice_matches(const Group& g, const std::vector<Bitset>& oracle);

/// Largest normal p-subgroup by scanning the normal subgroups.
SubgroupId largest_normal_p_subgroup(GroupView v, std::uint64_t p);

/// Least normal subgroup with nilpotent quotient, via quotient tables.
SubgroupId least_normal_with_nilpotent_quotient(const Group& g);

/// Frattini subgroup as the set of non-generators.
SubgroupId non_generators(const Group& g);

}  // namespace sst
