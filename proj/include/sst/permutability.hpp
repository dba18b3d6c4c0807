#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sst/group.hpp"

namespace sst {

enum class Predicate {
  normal,
  permutable,
  s_permutable,
  semipermutable,
  s_semipermutable,
  ss_permutable,
  nss_permutable,
  tau_quasinormal,
  abnormal,
  subnormal,
};

inline constexpr Predicate kAllPredicates[] = {
    Predicate::normal,           Predicate::permutable,     Predicate::s_permutable,
    Predicate::semipermutable,   Predicate::s_semipermutable, Predicate::ss_permutable,
    Predicate::nss_permutable,   Predicate::tau_quasinormal, Predicate::abnormal,
    Predicate::subnormal,
};

const char* predicate_name(Predicate p);
/// Accepts the full names and the short forms s, semi, s_semi, ss, nss, tau.
std::optional<Predicate> parse_predicate(std::string_view text);

/// Why a universally quantified predicate fails.
struct Refutation {
  /// The subgroup the subject fails against (or the stalled term for
  /// subnormality, or the join for abnormality).
  SubgroupId subgroup = 0;
  /// For supplement predicates: the failing Sylow subgroup of `subgroup`.
  std::optional<SubgroupId> inner;
  /// For normality and abnormality: the offending element.
  std::optional<Element> element;

  bool operator==(const Refutation&) const = default;
};

struct PredicateVerdict {
  Predicate predicate;
  SubgroupId subject = 0;
  SubgroupId ambient = 0;
  bool verdict = false;
  /// Supplement K for true SS / NSS verdicts.
  std::optional<SubgroupId> witness;
  std::optional<Refutation> refutation;

  bool operator==(const PredicateVerdict&) const = default;
};

/// Decides predicate p for h in the ambient group of v. Results are
/// memoized on the Group; witnesses and refutations are canonically least.
/// Throws NotSubgroup when h is not below the ambient group.
PredicateVerdict evaluate(GroupView v, SubgroupId h, Predicate p);
/// evaluate(v, h, p).verdict
bool holds(GroupView v, SubgroupId h, Predicate p);

PredicateVerdict is_permutable(GroupView v, SubgroupId h);
PredicateVerdict is_s_permutable(GroupView v, SubgroupId h);
PredicateVerdict is_semipermutable(GroupView v, SubgroupId h);
PredicateVerdict is_s_semipermutable(GroupView v, SubgroupId h);
PredicateVerdict is_ss_permutable(GroupView v, SubgroupId h);
PredicateVerdict is_nss_permutable(GroupView v, SubgroupId h);
PredicateVerdict is_tau_quasinormal(GroupView v, SubgroupId h);
PredicateVerdict is_abnormal(GroupView v, SubgroupId h);

/// K is a supplement of h in the ambient group and h permutes with every
/// Sylow subgroup of K (computed inside K); `normal` also demands K normal.
bool is_ss_supplement(GroupView v, SubgroupId h, SubgroupId k, bool normal);
/// Every supplement passing is_ss_supplement, ascending.
std::vector<SubgroupId> ss_supplements(GroupView v, SubgroupId h, bool normal);

/// Re-derives a stored verdict from its witness or refutation alone.
bool recheck(GroupView v, const PredicateVerdict& verdict);

struct NormalizerPairVerdict {
  SubgroupId h;
  SubgroupId k;
  /// Evaluated inside N_G(K).
  PredicateVerdict ss;
  PredicateVerdict nss;
};

/// Every pair of p-subgroups H <= K of the ambient group, with H decided in
/// N(K). Throws NotPrime.
std::vector<NormalizerPairVerdict> ss_permutable_in_normalizer_pairs(GroupView v, std::uint64_t p);

}  // namespace sst
