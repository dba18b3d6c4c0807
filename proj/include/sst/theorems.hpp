#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sst/group.hpp"
#include "sst/tri.hpp"

namespace sst {

enum class TheoremId {
  T1_1, A, B, C, D, E, F, G, H, I,
  C1_4, C1_6, C1_7,
  L2_1, L2_2, L2_3, L2_4, L2_5, L2_6, L2_7, L2_8, L3_1,
  KEGEL,
  /// Implications among the subgroup predicates on every subgroup.
  PREDICATE_LATTICE,
  /// Brute-force class verdicts against their characterizations.
  CLASS_AGREEMENT,
  /// Independent recomputations: lattice, O_p, chief series, witnesses.
  ORACLES,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::T1_1, TheoremId::A,    TheoremId::B,    TheoremId::C,    TheoremId::D,
    TheoremId::E,    TheoremId::F,    TheoremId::G,    TheoremId::H,    TheoremId::I,
    TheoremId::C1_4, TheoremId::C1_6, TheoremId::C1_7, TheoremId::L2_1, TheoremId::L2_2,
    TheoremId::L2_3, TheoremId::L2_4, TheoremId::L2_5, TheoremId::L2_6, TheoremId::L2_7,
    TheoremId::L2_8, TheoremId::L3_1, TheoremId::KEGEL, TheoremId::PREDICATE_LATTICE,
    TheoremId::CLASS_AGREEMENT, TheoremId::ORACLES,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view text);
/// G and H take a list of factors rather than a single group.
bool is_product_check(TheoremId id);

/// A subgroup described by its lattice id, order and generator words.
struct SubgroupRef {
  SubgroupId id = 0;
  std::size_t order = 0;
  std::vector<std::string> generators;

  bool operator==(const SubgroupRef&) const = default;
};

SubgroupRef describe(const Group& g, SubgroupId h);
/// Shortest word of an element over the group's generators.
std::string element_name(const Group& g, Element x);

struct Statement {
  std::string label;
  Tri value = Tri::NotApplicable;
  /// Number of instances checked for quantified statements (0 otherwise).
  std::size_t instances = 0;
};

struct Counterexample {
  std::string statement;
  std::string description;
  /// Named subgroups, e.g. ("H", ...), ("K", ...).
  std::vector<std::pair<std::string, SubgroupRef>> subgroups;
  std::optional<std::string> element;
};

struct TheoremReport {
  TheoremId id;
  std::string group_name;
  std::vector<Statement> statements;
  /// False when the hypotheses of a gated check do not hold.
  bool applicable = true;
  bool pass = true;
  std::vector<Counterexample> counterexamples;
  /// Fixed remark attached to the check, if any.
  std::string note;
};

/// Sets pass: all applicable statements equal.
void settle_equivalence(TheoremReport& r);
/// Sets pass: no statement is False.
void settle_all_hold(TheoremReport& r);

TheoremReport check_theorem_1_1(const Group& g);
TheoremReport check_theorem_A(const Group& g);
TheoremReport check_theorem_B(const Group& g);
TheoremReport check_theorem_C(const Group& g);
TheoremReport check_theorem_D(const Group& g);
TheoremReport check_theorem_E(const Group& g);
TheoremReport check_theorem_F(const Group& g);
/// Factors must be at least two; `product` is their direct product.
TheoremReport check_theorem_G(const std::vector<const Group*>& factors, const Group& product);
TheoremReport check_theorem_H(const std::vector<const Group*>& factors, const Group& product);
TheoremReport check_theorem_I(const Group& g);
TheoremReport check_corollary_1_4(const Group& g);
TheoremReport check_corollary_1_6(const Group& g);
TheoremReport check_corollary_1_7(const Group& g);

TheoremReport check_lemma_2_1(const Group& g);
TheoremReport check_lemma_2_2(const Group& g);
TheoremReport check_lemma_2_3(const Group& g);
TheoremReport check_lemma_2_4(const Group& g);
TheoremReport check_lemma_2_5(const Group& g);
TheoremReport check_lemma_2_6(const Group& g);
TheoremReport check_lemma_2_7(const Group& g);
TheoremReport check_lemma_2_8(const Group& g);
TheoremReport check_lemma_3_1(const Group& g);
TheoremReport check_kegel(const Group& g);
/// Every lemma check above, in id order.
std::vector<TheoremReport> check_lemmas(const Group& g);

TheoremReport check_predicate_lattice(const Group& g);
TheoremReport check_class_agreement(const Group& g);
TheoremReport check_oracles(const Group& g);

/// Dispatches a single-group check. Throws std::invalid_argument for G and H.
TheoremReport run_check(const Group& g, TheoremId id);

}  // namespace sst
