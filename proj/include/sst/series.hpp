#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sst/group.hpp"

namespace sst {

struct SeriesRecord {
  enum class Kind { derived, lower_central, upper_central, chief, normal_closure_chain };
  Kind kind;
  /// Distinct terms; derived, lower central and chief series descend,
  /// the upper central series ascends.
  std::vector<SubgroupId> terms;
};

const char* series_name(SeriesRecord::Kind kind);

SubgroupId derived_subgroup(GroupView v);
SeriesRecord derived_series(GroupView v);
SeriesRecord lower_central_series(GroupView v);
SeriesRecord upper_central_series(GroupView v);

/// Derived series reaches the trivial subgroup.
bool solvable(GroupView v);
/// Lower central series reaches the trivial subgroup.
bool nilpotent(GroupView v);

/// Stable term of the lower central series.
SubgroupId nilpotent_residual(GroupView v);

/// Largest normal p-subgroup, computed as the intersection of the Sylow
/// p-subgroups and cross-checked against a scan of normal p-subgroups.
SubgroupId o_p(GroupView v, std::uint64_t p);
/// O^p: generated by the elements of order prime to p.
SubgroupId o_p_residual(GroupView v, std::uint64_t p);

SubgroupId fitting(GroupView v);
/// Subnormal subgroups Q with Q = Q' and Q/Z(Q) simple.
std::vector<SubgroupId> components(GroupView v);
/// F(G) joined with the layer E(G).
SubgroupId generalized_fitting(GroupView v);
SubgroupId frattini(GroupView v);
SubgroupId hypercenter(GroupView v);

enum class TieBreak { least, greatest };

/// Chief series from the ambient group down to 1. At each step the chosen
/// minimal normal subgroup above the previous term is the least (or
/// greatest) in canonical order.
SeriesRecord chief_series(GroupView v, TieBreak tie = TieBreak::least);
/// Factor orders |N_i / N_{i+1}| of the chief series, top first.
std::vector<std::size_t> chief_factor_orders(GroupView v, const SeriesRecord& chief);
/// N/M has no normal subgroup strictly between (M normal in N).
bool is_simple_factor(const Group& g, SubgroupId upper, SubgroupId lower);
bool is_sc_group(GroupView v, TieBreak tie = TieBreak::least);

/// One Sylow subgroup per prime of the ambient order, pairwise permuting.
using SylowSystem = std::vector<SubgroupId>;
/// First Sylow system in canonical order. Throws NotSolvable.
SylowSystem sylow_system(GroupView v);
/// Every Sylow system (used to check choice independence).
std::vector<SylowSystem> all_sylow_systems(GroupView v);
/// Intersection of the normalizers of the system members.
SubgroupId system_normalizer_of(GroupView v, const SylowSystem& system);
/// Normalizer of the canonical Sylow system. Throws NotSolvable.
SubgroupId system_normalizer(GroupView v);

std::vector<std::uint64_t> pi(GroupView v);
std::uint64_t order_p_part(GroupView v, std::uint64_t p);

}  // namespace sst
