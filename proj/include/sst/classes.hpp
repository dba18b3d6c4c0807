#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sst/group.hpp"
#include "sst/permutability.hpp"
#include "sst/tri.hpp"

namespace sst {

enum class GroupClass { T, PT, PST, BT, SBT, SST, NSST, SC, nilpotent, solvable, supersolvable, complemented };

inline constexpr GroupClass kAllClasses[] = {
    GroupClass::T,   GroupClass::PT,        GroupClass::PST,      GroupClass::BT,
    GroupClass::SBT, GroupClass::SST,       GroupClass::NSST,     GroupClass::SC,
    GroupClass::nilpotent, GroupClass::solvable, GroupClass::supersolvable, GroupClass::complemented,
};

const char* class_name(GroupClass c);
std::optional<GroupClass> parse_class(std::string_view text);

enum class Via { bruteforce, characterization };
const char* via_name(Via v);

struct ClassCounterexample {
  /// For transitivity: H <= K with H related to K, K related to G, H not
  /// related to G. For single-subgroup failures only `h` is set.
  SubgroupId h = 0;
  std::optional<SubgroupId> k;
  /// For Sylow-pair failures.
  std::optional<SubgroupId> other;
  std::string reason;
};

struct ClassVerdict {
  GroupClass cls;
  Via via;
  Tri verdict = Tri::False;
  std::optional<ClassCounterexample> counterexample;

  bool is_true() const { return verdict == Tri::True; }
};

/// Transitivity of `relation` over all H <= K <= ambient, each relation read
/// inside its own ambient. Counterexample: least H, then least K.
/// Throws UnknownRelation for predicates that do not define a class.
ClassVerdict is_transitive_class(GroupView v, Predicate relation);
/// The predicate whose transitivity defines the class; throws UnknownRelation
/// for non-transitivity classes.
Predicate defining_relation(GroupClass c);

/// Nilpotent residual abelian, Hall, and acted on by power automorphisms.
/// NotApplicable for non-solvable groups.
ClassVerdict is_pst_characterization(GroupView v);
/// PST characterization plus [G_p, G_q] = 1 for distinct p, q outside pi(L).
ClassVerdict is_bt_characterization(GroupView v);
/// Every cyclic subgroup of prime-power order is SS-permutable.
ClassVerdict is_sst_characterization(GroupView v);

ClassVerdict is_nilpotent(GroupView v);
ClassVerdict is_solvable(GroupView v);
/// Chief factors of prime order; asserted equal to solvable and SC.
ClassVerdict is_supersolvable(GroupView v);
/// Every subgroup has a complement; asserted equal to the Hall
/// characterization (supersolvable with elementary abelian Sylows).
ClassVerdict is_complemented(GroupView v);
ClassVerdict is_sc(GroupView v);

/// Brute force where defined, direct computation otherwise.
ClassVerdict classify(GroupView v, GroupClass c);

bool has_elementary_abelian_sylows(GroupView v);

/// Every l in n is conjugated into <l>. Asserted equal to "every subgroup of
/// n is normal". Throws NotNormal.
bool acts_by_power_automorphisms(GroupView v, SubgroupId n);

/// Chief factors below a normal p-subgroup n all have order p and carry the
/// same power-map action of the ambient group. Throws NotNormal, NotPGroup.
bool chief_factors_below_cyclic_and_G_isomorphic(GroupView v, SubgroupId n);

}  // namespace sst
