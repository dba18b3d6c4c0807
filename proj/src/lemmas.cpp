#include <numeric>

#include "check_support.hpp"
#include "sst/theorems.hpp"

namespace sst {

using detail::every_subgroup;
using detail::example;
using detail::gated;
using detail::in_class;
using detail::solvable_in;
using detail::start;
using detail::Tally;

namespace {

struct Variant {
  Predicate predicate;
  bool normal;
  const char* tag;
};

constexpr Variant kVariants[] = {{Predicate::ss_permutable, false, "SS"}, {Predicate::nss_permutable, true, "NSS"}};

std::string label(const char* item, const Variant& v, const char* text) {
  return std::string(item) + " " + v.tag + ": " + text;
}

}  // namespace

TheoremReport check_lemma_2_1(const Group& g) {
  auto r = start(TheoremId::L2_1, g);
  const auto normals = normal_subgroups(g);
  const SubgroupId fit = fitting(g);
  for (const Variant& var : kVariants) {
    Tally t1(label("(1)", var, "restriction to every L containing H"));
    Tally t2(label("(2)", var, "image in every quotient G/N"));
    Tally t3(label("(3)", var, "L/N related in G/N lifts to L in G"));
    Tally t4(label("(4)", var, "H is S-semipermutable"));
    Tally t5(label("(5)", var, "H <= F(G) is S-permutable"));
    Tally t6(label("(6)", var, "every conjugate of the supplement is a supplement"));
    Tally t7(label("(7)", var, "NK is a supplement for nilpotent normal N"));
    Tally t8(label("(8)", var, "HK_p is Sylow for p-subgroups H"));

    g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
      const PredicateVerdict v = evaluate(g, h, var.predicate);
      if (!v.verdict) return;
      const SubgroupId k = *v.witness;
      auto refs = [&](std::vector<std::pair<std::string, SubgroupRef>> extra) {
        extra.insert(extra.begin(), {{"H", describe(g, h)}, {"K", describe(g, k)}});
        return extra;
      };
      g.subgroups_of(g.top()).for_each([&](SubgroupId l) {
        if (!g.contains(l, h)) return;
        t1.record(holds(GroupView(g, l), h, var.predicate),
                  [&] { return example("not related in L", refs({{"L", describe(g, l)}})); });
      });
      for (SubgroupId n : normals) {
        const auto& q = g.quotient(n);
        t2.record(holds(*q.group, g.image(q, h), var.predicate),
                  [&] { return example("image not related in G/N", refs({{"N", describe(g, n)}})); });
      }
      t4.record(holds(g, h, Predicate::s_semipermutable), [&] { return example("not S-semipermutable", refs({})); });
      if (g.contains(fit, h))
        t5.record(holds(g, h, Predicate::s_permutable), [&] { return example("not S-permutable", refs({})); });
      for (Element x = 0; x < g.order(); ++x) {
        const SubgroupId kx = g.conjugate(k, x);
        t6.record(is_ss_supplement(g, h, kx, var.normal), [&] {
          auto ce = example("conjugate supplement fails", refs({{"K^x", describe(g, kx)}}));
          ce.element = element_name(g, x);
          return ce;
        });
      }
      for (SubgroupId n : normals) {
        if (!nilpotent(GroupView(g, n))) continue;
        const SubgroupId nk = g.join(n, k);
        t7.record(is_ss_supplement(g, h, nk, var.normal),
                  [&] { return example("NK fails", refs({{"N", describe(g, n)}, {"NK", describe(g, nk)}})); });
      }
      if (h != g.bottom() && is_p_group(g, h)) {
        const auto p = g.primes_of(h).front();
        std::vector<SubgroupId> kps = g.sylows(k, p);
        if (kps.empty()) kps.push_back(g.bottom());
        for (SubgroupId kp : kps)
          t8.record(detail::product_is_sylow(g, h, kp, p),
                    [&] { return example("HK_p is not Sylow", refs({{"K_p", describe(g, kp)}})); });
      }
    });

    for (SubgroupId n : normals) {
      const auto& q = g.quotient(n);
      g.subgroups_of(g.top()).for_each([&](SubgroupId l) {
        if (!g.contains(l, n) || !holds(*q.group, g.image(q, l), var.predicate)) return;
        t3.record(holds(g, l, var.predicate), [&] {
          return example("L/N related but L is not", {{"N", describe(g, n)}, {"L", describe(g, l)}});
        });
      });
    }
    for (Tally* t : {&t1, &t2, &t3, &t4, &t5, &t6, &t7, &t8}) t->finish(r);
  }
  settle_all_hold(r);
  return r;
}

TheoremReport check_lemma_2_2(const Group& g) {
  auto r = start(TheoremId::L2_2, g);
  Tally t("chief factors below N cyclic and G-isomorphic iff every subgroup of N S-permutable");
  for (SubgroupId n : normal_subgroups(g)) {
    if (n == g.bottom() || !is_p_group(g, n)) continue;
    const bool chief = chief_factors_below_cyclic_and_G_isomorphic(g, n);
    const bool sperm = every_subgroup(g, n, [&](SubgroupId h) { return holds(g, h, Predicate::s_permutable); });
    t.record(chief == sperm, [&] { return example("criteria disagree", {{"N", describe(g, n)}}); });
  }
  t.finish(r);
  settle_all_hold(r);
  return r;
}

TheoremReport check_lemma_2_3(const Group& g) {
  auto r = start(TheoremId::L2_3, g);
  const SubgroupId fstar = generalized_fitting(g);
  r.statements = {
      {"every subgroup of F*(G) tau-quasinormal",
       tri(every_subgroup(g, fstar, [&](SubgroupId h) { return holds(g, h, Predicate::tau_quasinormal); }))},
      {"solvable PST-group", tri(solvable_in(g, GroupClass::PST))},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_lemma_2_4(const Group& g) {
  auto r = start(TheoremId::L2_4, g);
  const bool sol = solvable(g);
  bool cyclic_ok = true;
  if (sol)
    for (SubgroupId h : cyclic_prime_power_subgroups(g))
      cyclic_ok = cyclic_ok && holds(g, h, Predicate::s_semipermutable);
  r.statements = {
      {"BT-group", gated(sol, sol && in_class(g, GroupClass::BT))},
      {"every cyclic prime-power subgroup S-semipermutable", gated(sol, cyclic_ok)},
  };
  settle_equivalence(r);
  return r;
}

TheoremReport check_lemma_2_5(const Group& g) {
  auto r = start(TheoremId::L2_5, g);
  const bool nilpotent_by_abelian = g.contains(fitting(g), g.commutator(g.top(), g.top()));
  Tally t("SS-permutable iff NSS-permutable");
  if (nilpotent_by_abelian) {
    g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
      t.record(holds(g, h, Predicate::ss_permutable) == holds(g, h, Predicate::nss_permutable),
               [&] { return example("SS and NSS differ", {{"H", describe(g, h)}}); });
    });
  }
  t.finish(r);
  settle_all_hold(r);
  return r;
}

TheoremReport check_lemma_2_6(const Group& g) {
  auto r = start(TheoremId::L2_6, g);
  const bool sol = solvable(g);
  for (const Variant& var : kVariants) {
    Tally t(std::string(var.tag) + ": join of coprime related subgroups is related");
    std::vector<SubgroupId> related;
    g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
      if (h != g.bottom() && holds(g, h, var.predicate)) related.push_back(h);
    });
    for (std::size_t i = 0; i < related.size(); ++i) {
      for (std::size_t j = i + 1; j < related.size(); ++j) {
        const SubgroupId a = related[i];
        const SubgroupId b = related[j];
        if (std::gcd(g.size_of(a), g.size_of(b)) != 1) continue;
        if (!sol && !(is_p_group(g, a) && is_p_group(g, b))) continue;
        const SubgroupId j_ab = g.join(a, b);
        t.record(holds(g, j_ab, var.predicate), [&] {
          return example("join is not related", {{"T", describe(g, a)}, {"S", describe(g, b)}, {"<T,S>", describe(g, j_ab)}});
        });
      }
    }
    t.finish(r);
  }
  settle_all_hold(r);
  return r;
}

TheoremReport check_lemma_2_7(const Group& g) {
  auto r = start(TheoremId::L2_7, g);
  if (!solvable_in(g, GroupClass::PST)) {
    r.applicable = false;
    r.statements = {{"solvable PST-group", Tri::False}};
    return r;
  }
  Tally t1("(1) D' normal for every system normalizer D");
  for (const auto& system : all_sylow_systems(g)) {
    const SubgroupId d = system_normalizer_of(g, system);
    const SubgroupId dd = g.commutator(d, d);
    t1.record(is_normal(g, dd), [&] { return example("D' is not normal", {{"D", describe(g, d)}}); });
  }
  Tally t2("(2) [H,K_p] <= O_p for SS-permutable p-subgroups H and every supplement K");
  g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
    if (h == g.bottom() || !is_p_group(g, h)) return;
    const auto p = g.primes_of(h).front();
    const SubgroupId op = o_p(g, p);
    for (SubgroupId k : ss_supplements(g, h, false)) {
      for (SubgroupId kp : g.sylows(k, p)) {
        t2.record(g.contains(op, g.commutator(h, kp)), [&] {
          return example("[H,K_p] escapes O_p", {{"H", describe(g, h)}, {"K", describe(g, k)}, {"K_p", describe(g, kp)}});
        });
      }
    }
  });
  t1.finish(r);
  t2.finish(r);
  settle_all_hold(r);
  return r;
}

TheoremReport check_lemma_2_8(const Group& g) {
  auto r = start(TheoremId::L2_8, g);
  if (!solvable_in(g, GroupClass::BT)) {
    r.applicable = false;
    r.statements = {{"solvable BT-group", Tri::False}};
    return r;
  }
  const SubgroupId l = nilpotent_residual(g);
  Tally t("p-subgroup H with a Sylow partner K_p and [H,<K_p^L>] <= O_p is SS-permutable");
  for (auto p : detail::primes_outside(g, l)) {
    const SubgroupId op = o_p(g, p);
    std::vector<SubgroupId> p_subgroups;
    g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
      if (detail::is_p_subgroup_of_order(g, h, p)) p_subgroups.push_back(h);
    });
    for (SubgroupId h : p_subgroups) {
      bool antecedent = false;
      for (SubgroupId k : p_subgroups) {
        if (!detail::product_is_sylow(g, h, k, p)) continue;
        if (g.contains(op, g.commutator(h, detail::closure_under(g, k, l)))) {
          antecedent = true;
          break;
        }
      }
      if (!antecedent) continue;
      t.record(holds(g, h, Predicate::ss_permutable),
               [&] { return example("H is not SS-permutable", {{"H", describe(g, h)}}); });
    }
  }
  t.finish(r);
  settle_all_hold(r);
  return r;
}

TheoremReport check_lemma_3_1(const Group& g) {
  auto r = start(TheoremId::L3_1, g);
  if (!solvable_in(g, GroupClass::PST)) {
    r.applicable = false;
    r.statements = {{"solvable PST-group", Tri::False}};
    return r;
  }
  const Group& q = *g.quotient(hypercenter(g)).group;
  r.statements = {
      {"G/Z_inf is a solvable SST-group", tri(solvable_in(q, GroupClass::SST))},
      {"G is a solvable SST-group", tri(solvable_in(g, GroupClass::SST))},
      {"G/Z_inf is a solvable BT-group", tri(solvable_in(q, GroupClass::BT))},
      {"G is a solvable BT-group", tri(solvable_in(g, GroupClass::BT))},
  };
  r.pass = !(r.statements[0].value == Tri::True && r.statements[1].value == Tri::False) &&
           !(r.statements[2].value == Tri::True && r.statements[3].value == Tri::False);
  if (!r.pass) r.counterexamples.push_back(example("quotient by the hypercenter does not lift"));
  return r;
}

TheoremReport check_kegel(const Group& g) {
  auto r = start(TheoremId::KEGEL, g);
  Tally t("S-permutable subgroups are subnormal");
  g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
    if (!holds(g, h, Predicate::s_permutable)) return;
    t.record(holds(g, h, Predicate::subnormal),
             [&] { return example("S-permutable but not subnormal", {{"H", describe(g, h)}}); });
  });
  t.finish(r);
  const bool subnormal_sperm = every_subgroup(g, g.top(), [&](SubgroupId h) {
    return !holds(g, h, Predicate::subnormal) || holds(g, h, Predicate::s_permutable);
  });
  const bool pst = in_class(g, GroupClass::PST);
  r.statements.push_back({"PST-group iff every subnormal subgroup S-permutable", tri(pst == subnormal_sperm)});
  if (pst != subnormal_sperm) r.counterexamples.push_back(example("PST verdict disagrees with subnormal criterion"));
  settle_all_hold(r);
  return r;
}

TheoremReport check_predicate_lattice(const Group& g) {
  auto r = start(TheoremId::PREDICATE_LATTICE, g);
  using P = Predicate;
  const std::pair<P, P> arrows[] = {
      {P::normal, P::permutable},         {P::permutable, P::s_permutable},
      {P::normal, P::nss_permutable},     {P::nss_permutable, P::ss_permutable},
      {P::ss_permutable, P::s_semipermutable}, {P::ss_permutable, P::tau_quasinormal},
      {P::semipermutable, P::s_semipermutable}, {P::permutable, P::semipermutable},
      {P::s_permutable, P::s_semipermutable},   {P::s_permutable, P::nss_permutable},
      {P::normal, P::subnormal},
  };
  for (const auto& [from, to] : arrows) {
    Tally t(std::string(predicate_name(from)) + " => " + predicate_name(to));
    g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
      if (!holds(g, h, from)) return;
      t.record(holds(g, h, to), [&] { return example("implication fails", {{"H", describe(g, h)}}); });
    });
    t.finish(r);
  }
  Tally proper("proper normal subgroups are not abnormal");
  g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
    if (h == g.top() || !holds(g, h, P::normal)) return;
    proper.record(!holds(g, h, P::abnormal), [&] { return example("normal and abnormal", {{"H", describe(g, h)}}); });
  });
  proper.finish(r);
  settle_all_hold(r);
  return r;
}

TheoremReport check_class_agreement(const Group& g) {
  auto r = start(TheoremId::CLASS_AGREEMENT, g);
  const bool sol = solvable(g);
  auto implies = [&](GroupClass a, GroupClass b) {
    return tri(!in_class(g, a) || in_class(g, b));
  };
  auto agree = [&](GroupClass brute, const ClassVerdict& chr) {
    if (chr.verdict == Tri::NotApplicable) return Tri::NotApplicable;
    return tri(in_class(g, brute) == chr.is_true());
  };
  r.statements = {
      {"T => PT", implies(GroupClass::T, GroupClass::PT)},
      {"PT => PST", implies(GroupClass::PT, GroupClass::PST)},
      {"PST bruteforce = characterization", agree(GroupClass::PST, is_pst_characterization(g))},
      {"BT bruteforce = characterization", agree(GroupClass::BT, is_bt_characterization(g))},
      {"SBT bruteforce = characterization", agree(GroupClass::SBT, is_bt_characterization(g))},
      {"SST bruteforce = characterization", agree(GroupClass::SST, is_sst_characterization(g))},
      {"NSST = SST", gated(sol, in_class(g, GroupClass::NSST) == in_class(g, GroupClass::SST))},
      {"supersolvable = solvable and SC",
       tri(in_class(g, GroupClass::supersolvable) == (sol && in_class(g, GroupClass::SC)))},
      {"complemented = supersolvable with elementary abelian Sylows",
       tri(in_class(g, GroupClass::complemented) ==
           (in_class(g, GroupClass::supersolvable) && has_elementary_abelian_sylows(g)))},
  };
  settle_all_hold(r);
  for (const auto& s : r.statements)
    if (s.value == Tri::False) r.counterexamples.push_back(example(s.label + " fails"));
  return r;
}

}  // namespace sst
