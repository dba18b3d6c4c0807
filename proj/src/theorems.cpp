#include "sst/theorems.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "check_support.hpp"
#include "sst/errors.hpp"

namespace sst {

using detail::every_subgroup;
using detail::example;
using detail::gated;
using detail::in_class;
using detail::solvable_in;
using detail::start;
using detail::Tally;

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return "T1_1";
    case TheoremId::A: return "A";
    case TheoremId::B: return "B";
    case TheoremId::C: return "C";
    case TheoremId::D: return "D";
    case TheoremId::E: return "E";
    case TheoremId::F: return "F";
    case TheoremId::G: return "G";
    case TheoremId::H: return "H";
    case TheoremId::I: return "I";
    case TheoremId::C1_4: return "C1_4";
    case TheoremId::C1_6: return "C1_6";
    case TheoremId::C1_7: return "C1_7";
    case TheoremId::L2_1: return "L2_1";
    case TheoremId::L2_2: return "L2_2";
    case TheoremId::L2_3: return "L2_3";
    case TheoremId::L2_4: return "L2_4";
    case TheoremId::L2_5: return "L2_5";
    case TheoremId::L2_6: return "L2_6";
    case TheoremId::L2_7: return "L2_7";
    case TheoremId::L2_8: return "L2_8";
    case TheoremId::L3_1: return "L3_1";
    case TheoremId::KEGEL: return "KEGEL";
    case TheoremId::PREDICATE_LATTICE: return "PREDICATE_LATTICE";
    case TheoremId::CLASS_AGREEMENT: return "CLASS_AGREEMENT";
    case TheoremId::ORACLES: return "ORACLES";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view text) {
  for (TheoremId id : kAllTheorems)
    if (text == theorem_name(id)) return id;
  return std::nullopt;
}

bool is_product_check(TheoremId id) { return id == TheoremId::G || id == TheoremId::H; }

std::string element_name(const Group& g, Element x) {
  const auto words = shortest_words(g.table());
  if (x != 0 && words[x].empty()) return "#" + std::to_string(x);
  return to_string(words[x]);
}

SubgroupRef describe(const Group& g, SubgroupId h) {
  const auto words = shortest_words(g.table());
  SubgroupRef ref{h, g.size_of(h), {}};
  for (Element x : g.lattice()[h].generators)
    ref.generators.push_back(x != 0 && words[x].empty() ? "#" + std::to_string(x) : to_string(words[x]));
  return ref;
}

void settle_equivalence(TheoremReport& r) {
  std::optional<Tri> seen;
  r.pass = true;
  for (const auto& s : r.statements) {
    if (s.value == Tri::NotApplicable) continue;
    if (seen && *seen != s.value) r.pass = false;
    seen = s.value;
  }
  r.applicable = seen.has_value();
  if (!r.pass) {
    std::string vec;
    for (const auto& s : r.statements) vec += (vec.empty() ? "" : ", ") + s.label + "=" + tri_name(s.value);
    r.counterexamples.push_back(example("statements disagree: " + vec));
  }
}

void settle_all_hold(TheoremReport& r) {
  r.pass = true;
  bool any = false;
  for (const auto& s : r.statements) {
    if (s.value == Tri::False) r.pass = false;
    if (s.value != Tri::NotApplicable) any = true;
  }
  if (!any) r.applicable = false;
}

namespace {

bool every_subgroup_is(const Group& g, Predicate p) {
  return every_subgroup(g, g.top(), [&](SubgroupId h) { return holds(g, h, p); });
}

bool every_prime_power_subgroup_is(const Group& g, Predicate p) {
  for (SubgroupId h : prime_power_subgroups(g))
    if (!holds(g, h, p)) return false;
  return true;
}

bool every_cyclic_prime_power_subgroup_is(const Group& g, Predicate p) {
  for (SubgroupId h : cyclic_prime_power_subgroups(g))
    if (!holds(g, h, p)) return false;
  return true;
}

// Implication statements: antecedent true and consequent false fails.
void settle_implication(TheoremReport& r, std::size_t antecedent, std::size_t consequent) {
  const Tri a = r.statements[antecedent].value;
  const Tri c = r.statements[consequent].value;
  if (a == Tri::True && c == Tri::False) {
    r.pass = false;
    r.counterexamples.push_back(example(r.statements[antecedent].label + " holds but " +
                                        r.statements[consequent].label + " fails"));
  }
}

}  // namespace

TheoremReport check_theorem_1_1(const Group& g) {
  auto r = start(TheoremId::T1_1, g);
  const bool sol = solvable(g);
  r.statements = {
      {"(1) solvable BT-group", gated(sol, in_class(g, GroupClass::BT))},
      {"(2) solvable SBT-group", gated(sol, in_class(g, GroupClass::SBT))},
      {"(3) every subgroup semipermutable", tri(every_subgroup_is(g, Predicate::semipermutable))},
      {"(4) every subgroup S-semipermutable", tri(every_subgroup_is(g, Predicate::s_semipermutable))},
      {"(5) every prime-power subgroup semipermutable",
       tri(every_prime_power_subgroup_is(g, Predicate::semipermutable))},
      {"(6) every prime-power subgroup S-semipermutable",
       tri(every_prime_power_subgroup_is(g, Predicate::s_semipermutable))},
      {"(7) solvable PST-group with commuting Sylows outside pi(L)",
       sol ? is_bt_characterization(g).verdict : Tri::NotApplicable},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_theorem_A(const Group& g) {
  auto r = start(TheoremId::A, g);
  r.statements = {
      {"SST-group", tri(in_class(g, GroupClass::SST))},
      {"NSST-group", tri(in_class(g, GroupClass::NSST))},
      {"SC-group", tri(in_class(g, GroupClass::SC))},
  };
  r.pass = true;
  settle_implication(r, 0, 2);
  settle_implication(r, 1, 2);
  r.applicable = r.statements[0].value == Tri::True || r.statements[1].value == Tri::True;
  return r;
}

TheoremReport check_theorem_B(const Group& g) {
  auto r = start(TheoremId::B, g);
  const bool sol = solvable(g);
  auto subnormal_all = [&](Predicate p) {
    return every_subgroup(g, g.top(), [&](SubgroupId h) { return !is_subnormal(g, h) || holds(g, h, p); });
  };
  const SubgroupId fstar = generalized_fitting(g);
  auto fstar_all = [&](Predicate p) {
    return every_subgroup(g, fstar, [&](SubgroupId h) { return holds(g, h, p); });
  };
  r.statements = {
      {"(1) solvable, every subnormal subgroup SS-permutable", tri(sol && subnormal_all(Predicate::ss_permutable))},
      {"(2) solvable, every subnormal subgroup NSS-permutable",
       tri(sol && subnormal_all(Predicate::nss_permutable))},
      {"(3) every subgroup of F*(G) SS-permutable", tri(fstar_all(Predicate::ss_permutable))},
      {"(4) every subgroup of F*(G) NSS-permutable", tri(fstar_all(Predicate::nss_permutable))},
      {"(5) solvable PST-group", tri(solvable_in(g, GroupClass::PST))},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_theorem_C(const Group& g) {
  auto r = start(TheoremId::C, g);
  bool all_ss = true;
  bool all_nss = true;
  std::size_t pairs = 0;
  for (auto p : g.primes_of(g.top())) {
    for (const auto& pair : ss_permutable_in_normalizer_pairs(g, p)) {
      ++pairs;
      all_ss = all_ss && pair.ss.verdict;
      all_nss = all_nss && pair.nss.verdict;
    }
  }
  r.statements = {
      {"(1) H SS-permutable in N(K) for all p-subgroups H <= K", tri(all_ss), pairs},
      {"(2) H NSS-permutable in N(K) for all p-subgroups H <= K", tri(all_nss), pairs},
      {"(3) solvable PST-group", tri(solvable_in(g, GroupClass::PST))},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_theorem_D(const Group& g) {
  auto r = start(TheoremId::D, g);
  const bool sol = solvable(g);
  auto gate = [&](auto f) { return sol ? tri(f()) : Tri::NotApplicable; };
  r.statements = {
      {"(1) SST-group", gate([&] { return in_class(g, GroupClass::SST); })},
      {"(2) NSST-group", gate([&] { return in_class(g, GroupClass::NSST); })},
      {"(3) every subgroup SS-permutable", gate([&] { return every_subgroup_is(g, Predicate::ss_permutable); })},
      {"(4) every subgroup NSS-permutable", gate([&] { return every_subgroup_is(g, Predicate::nss_permutable); })},
      {"(5) every prime-power subgroup SS-permutable",
       gate([&] { return every_prime_power_subgroup_is(g, Predicate::ss_permutable); })},
      {"(6) every prime-power subgroup NSS-permutable",
       gate([&] { return every_prime_power_subgroup_is(g, Predicate::nss_permutable); })},
      {"(7) every cyclic prime-power subgroup SS-permutable",
       gate([&] { return every_cyclic_prime_power_subgroup_is(g, Predicate::ss_permutable); })},
      {"(8) every cyclic prime-power subgroup NSS-permutable",
       gate([&] { return every_cyclic_prime_power_subgroup_is(g, Predicate::nss_permutable); })},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_theorem_E(const Group& g) {
  auto r = start(TheoremId::E, g);
  if (!solvable_in(g, GroupClass::SST)) {
    r.applicable = false;
    r.statements = {{"solvable SST-group", Tri::False}};
    return r;
  }
  const SubgroupId phi = frattini(g);
  const SubgroupId l = nilpotent_residual(g);
  const SubgroupId phi_l = frattini(GroupView(g, l));
  Tally product("Phi(G) = Phi(L) x Phi(D) for every system normalizer D");
  for (const auto& system : all_sylow_systems(g)) {
    const SubgroupId d = system_normalizer_of(g, system);
    const SubgroupId phi_d = frattini(GroupView(g, d));
    const bool ok = g.meet(phi_l, phi_d) == g.bottom() && g.permutes(phi_l, phi_d) &&
                    g.join(phi_l, phi_d) == phi;
    product.record(ok, [&] {
      return example("Frattini subgroup is not the direct product",
                     {{"Phi(G)", describe(g, phi)}, {"Phi(L)", describe(g, phi_l)}, {"D", describe(g, d)},
                      {"Phi(D)", describe(g, phi_d)}});
    });
  }
  product.finish(r);
  const auto& q = g.quotient(phi);
  const bool complemented = is_complemented(*q.group).is_true();
  const bool hall = is_supersolvable(*q.group).is_true() && has_elementary_abelian_sylows(*q.group);
  r.statements.push_back({"G/Phi(G) complemented", tri(complemented)});
  r.statements.push_back({"G/Phi(G) supersolvable with elementary abelian Sylows", tri(hall)});
  settle_all_hold(r);
  return r;
}

namespace {

// Checks the two Sylow-product conditions for one subject; `commutes` decides
// the commutator containment against the closure <K^L>.
template <class Commutes>
bool has_sylow_partner(const Group& g, SubgroupId subject, std::uint64_t p, SubgroupId l,
                       const std::vector<SubgroupId>& p_subgroups, std::map<SubgroupId, SubgroupId>& closures,
                       Commutes commutes) {
  for (SubgroupId k : p_subgroups) {
    if (!detail::product_is_sylow(g, subject, k, p)) continue;
    auto it = closures.find(k);
    if (it == closures.end()) it = closures.emplace(k, detail::closure_under(g, k, l)).first;
    if (commutes(it->second)) return true;
  }
  return false;
}

}  // namespace

TheoremReport check_theorem_F(const Group& g) {
  auto r = start(TheoremId::F, g);
  if (!solvable_in(g, GroupClass::BT)) {
    r.applicable = false;
    r.statements = {{"solvable BT-group", Tri::False}};
    return r;
  }
  const SubgroupId l = nilpotent_residual(g);
  bool cond2 = true;
  bool cond3 = true;
  for (auto p : detail::primes_outside(g, l)) {
    const SubgroupId op = o_p(g, p);
    std::vector<SubgroupId> p_subgroups;
    g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
      if (detail::is_p_subgroup_of_order(g, h, p)) p_subgroups.push_back(h);
    });
    std::map<SubgroupId, SubgroupId> closures;
    for (SubgroupId h : p_subgroups) {
      if (!cond2) break;
      cond2 = has_sylow_partner(g, h, p, l, p_subgroups, closures,
                                [&](SubgroupId m) { return g.contains(op, g.commutator(h, m)); });
    }
    for (Element x = 0; x < g.order() && cond3; ++x) {
      if (p_part(element_order(g.table(), x), p) != element_order(g.table(), x)) continue;
      cond3 = has_sylow_partner(g, g.cyclic(x), p, l, p_subgroups, closures, [&](SubgroupId m) {
        bool inside = true;
        g.members(m).for_each([&](Element y) {
          if (inside && !g.members(op).test(g.table().commutator(x, y))) inside = false;
        });
        return inside;
      });
    }
  }
  r.statements = {
      {"(1) SST-group", tri(in_class(g, GroupClass::SST))},
      {"(2) every p-subgroup P has K_p with PK_p Sylow and [P,<K_p^L>] <= O_p", tri(cond2)},
      {"(3) every p-element x has K_p with <x>K_p Sylow and [x,<K_p^L>] <= O_p", tri(cond3)},
  };
  settle_equivalence(r);
  return r;
}

namespace {

TheoremReport start_product(TheoremId id, const std::vector<const Group*>& factors, const Group& product) {
  if (factors.size() < 2) throw std::invalid_argument("a product check needs at least two factors");
  TheoremReport r;
  r.id = id;
  r.group_name = product.name();
  return r;
}

}  // namespace

TheoremReport check_theorem_G(const std::vector<const Group*>& factors, const Group& product) {
  auto r = start_product(TheoremId::G, factors, product);
  bool rhs = true;
  for (const Group* f : factors) rhs = rhs && solvable_in(*f, GroupClass::BT);
  if (rhs) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = 0; j < factors.size(); ++j)
        if (i != j && std::gcd(factors[i]->size_of(nilpotent_residual(*factors[i])), factors[j]->order()) != 1)
          rhs = false;
  }
  r.statements = {
      {"product is a solvable BT-group", tri(solvable_in(product, GroupClass::BT))},
      {"factors solvable BT with (|L_i|,|G_j|) = 1", tri(rhs)},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_theorem_H(const std::vector<const Group*>& factors, const Group& product) {
  auto r = start_product(TheoremId::H, factors, product);
  bool hypothesis = true;
  for (const Group* f : factors) hypothesis = hypothesis && solvable_in(*f, GroupClass::SST);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (std::gcd(factors[i]->order(), factors[j]->order()) != 1) hypothesis = false;
  r.statements = {
      {"factors solvable SST with pairwise coprime orders", tri(hypothesis)},
      {"product is a solvable SST-group", tri(solvable_in(product, GroupClass::SST))},
  };
  r.applicable = hypothesis;
  r.pass = true;
  settle_implication(r, 0, 1);
  return r;
}

TheoremReport check_theorem_I(const Group& g) {
  auto r = start(TheoremId::I, g);
  auto exists_normal = [&](GroupClass target) {
    for (SubgroupId n : normal_subgroups(g)) {
      const GroupView vn(g, n);
      if (!solvable_in(vn, GroupClass::PST)) continue;
      const SubgroupId n2 = g.commutator(g.commutator(n, n), g.commutator(n, n));
      const Group& q = *g.quotient(n2).group;
      if (solvable_in(q, target)) return true;
    }
    return false;
  };
  r.statements = {
      {"solvable SST-group", tri(solvable_in(g, GroupClass::SST))},
      {"normal N solvable PST with G/N'' solvable SST", tri(exists_normal(GroupClass::SST))},
      {"solvable BT-group", tri(solvable_in(g, GroupClass::BT))},
      {"normal N solvable PST with G/N'' solvable BT", tri(exists_normal(GroupClass::BT))},
  };
  r.pass = r.statements[0].value == r.statements[1].value && r.statements[2].value == r.statements[3].value;
  if (!r.pass) r.counterexamples.push_back(example("normal-subgroup criterion disagrees with the class"));
  return r;
}

TheoremReport check_corollary_1_4(const Group& g) {
  auto r = start(TheoremId::C1_4, g);
  r.statements = {
      {"solvable SST-group", tri(solvable_in(g, GroupClass::SST))},
      {"BT-group", tri(in_class(g, GroupClass::BT))},
  };
  r.pass = true;
  r.applicable = r.statements[0].value == Tri::True;
  settle_implication(r, 0, 1);
  return r;
}

TheoremReport check_corollary_1_6(const Group& g) {
  auto r = start(TheoremId::C1_6, g);
  if (!solvable_in(g, GroupClass::SST)) {
    r.applicable = false;
    r.statements = {{"solvable SST-group", Tri::False}};
    return r;
  }
  Tally subs("every subgroup is a solvable SST-group");
  g.subgroups_of(g.top()).for_each([&](SubgroupId k) {
    subs.record(solvable_in(GroupView(g, k), GroupClass::SST),
                [&] { return example("subgroup is not SST", {{"K", describe(g, k)}}); });
  });
  Tally quots("every quotient is a solvable SST-group");
  for (SubgroupId n : normal_subgroups(g)) {
    const Group& q = *g.quotient(n).group;
    quots.record(solvable_in(q, GroupClass::SST),
                 [&] { return example("quotient is not SST", {{"N", describe(g, n)}}); });
  }
  subs.finish(r);
  quots.finish(r);
  settle_all_hold(r);
  return r;
}

TheoremReport check_corollary_1_7(const Group& g) {
  auto r = start(TheoremId::C1_7, g);
  const bool sol = solvable(g);
  auto either = [&](Predicate p) {
    return every_subgroup(g, g.top(),
                          [&](SubgroupId h) { return holds(g, h, p) || holds(g, h, Predicate::abnormal); });
  };
  r.statements = {
      {"(1) SST-group", gated(sol, sol && in_class(g, GroupClass::SST))},
      {"(2) every subgroup SS-permutable or abnormal", gated(sol, sol && either(Predicate::ss_permutable))},
      {"(3) every subgroup NSS-permutable or abnormal", gated(sol, sol && either(Predicate::nss_permutable))},
  };
  settle_equivalence(r);
  return r;
}

std::vector<TheoremReport> check_lemmas(const Group& g) {
  return {check_lemma_2_1(g), check_lemma_2_2(g), check_lemma_2_3(g), check_lemma_2_4(g),
          check_lemma_2_5(g), check_lemma_2_6(g), check_lemma_2_7(g), check_lemma_2_8(g),
          check_lemma_3_1(g), check_kegel(g)};
}

TheoremReport run_check(const Group& g, TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return check_theorem_1_1(g);
    case TheoremId::A: return check_theorem_A(g);
    case TheoremId::B: return check_theorem_B(g);
    case TheoremId::C: return check_theorem_C(g);
    case TheoremId::D: return check_theorem_D(g);
    case TheoremId::E: return check_theorem_E(g);
    case TheoremId::F: return check_theorem_F(g);
    case TheoremId::I: return check_theorem_I(g);
    case TheoremId::C1_4: return check_corollary_1_4(g);
    case TheoremId::C1_6: return check_corollary_1_6(g);
    case TheoremId::C1_7: return check_corollary_1_7(g);
    case TheoremId::L2_1: return check_lemma_2_1(g);
    case TheoremId::L2_2: return check_lemma_2_2(g);
    case TheoremId::L2_3: return check_lemma_2_3(g);
    case TheoremId::L2_4: return check_lemma_2_4(g);
    case TheoremId::L2_5: return check_lemma_2_5(g);
    case TheoremId::L2_6: return check_lemma_2_6(g);
    case TheoremId::L2_7: return check_lemma_2_7(g);
    case TheoremId::L2_8: return check_lemma_2_8(g);
    case TheoremId::L3_1: return check_lemma_3_1(g);
    case TheoremId::KEGEL: return check_kegel(g);
    case TheoremId::PREDICATE_LATTICE: return check_predicate_lattice(g);
    case TheoremId::CLASS_AGREEMENT: return check_class_agreement(g);
    case TheoremId::ORACLES: return check_oracles(g);
    case TheoremId::G:
    case TheoremId::H: break;
  }
  throw std::invalid_argument(std::string(theorem_name(id)) + " runs over a list of factors");
}

}  // namespace sst
