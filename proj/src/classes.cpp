#include "sst/classes.hpp"

#include <numeric>

#include "sst/errors.hpp"
#include "sst/number_theory.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"

namespace sst {

namespace {

ClassVerdict make(GroupClass c, Via via, bool verdict) { return {c, via, tri(verdict), std::nullopt}; }

ClassVerdict fail(GroupClass c, Via via, SubgroupId h, std::string reason) {
  ClassCounterexample ce;
  ce.h = h;
  ce.reason = std::move(reason);
  return {c, via, Tri::False, std::move(ce)};
}

ClassVerdict not_applicable(GroupClass c) { return {c, Via::characterization, Tri::NotApplicable, std::nullopt}; }

bool is_elementary_abelian(const Group& g, SubgroupId h) {
  if (!is_abelian(GroupView(g, h))) return false;
  const auto primes = g.primes_of(h);
  if (primes.size() > 1) return false;
  bool ok = true;
  g.members(h).for_each([&](Element x) {
    if (x != 0 && element_order(g.table(), x) != primes.front()) ok = false;
  });
  return ok;
}

}  // namespace

const char* class_name(GroupClass c) {
  switch (c) {
    case GroupClass::T: return "T";
    case GroupClass::PT: return "PT";
    case GroupClass::PST: return "PST";
    case GroupClass::BT: return "BT";
    case GroupClass::SBT: return "SBT";
    case GroupClass::SST: return "SST";
    case GroupClass::NSST: return "NSST";
    case GroupClass::SC: return "SC";
    case GroupClass::nilpotent: return "nilpotent";
    case GroupClass::solvable: return "solvable";
    case GroupClass::supersolvable: return "supersolvable";
    case GroupClass::complemented: return "complemented";
  }
  return "?";
}

std::optional<GroupClass> parse_class(std::string_view text) {
  for (GroupClass c : kAllClasses)
    if (text == class_name(c)) return c;
  return std::nullopt;
}

const char* via_name(Via v) { return v == Via::bruteforce ? "bruteforce" : "characterization"; }

Predicate defining_relation(GroupClass c) {
  switch (c) {
    case GroupClass::T: return Predicate::normal;
    case GroupClass::PT: return Predicate::permutable;
    case GroupClass::PST: return Predicate::s_permutable;
    case GroupClass::BT: return Predicate::semipermutable;
    case GroupClass::SBT: return Predicate::s_semipermutable;
    case GroupClass::SST: return Predicate::ss_permutable;
    case GroupClass::NSST: return Predicate::nss_permutable;
    default: throw UnknownRelation(std::string(class_name(c)) + " is not defined by a transitive relation");
  }
}

ClassVerdict is_transitive_class(GroupView v, Predicate relation) {
  GroupClass cls;
  switch (relation) {
    case Predicate::normal: cls = GroupClass::T; break;
    case Predicate::permutable: cls = GroupClass::PT; break;
    case Predicate::s_permutable: cls = GroupClass::PST; break;
    case Predicate::semipermutable: cls = GroupClass::BT; break;
    case Predicate::s_semipermutable: cls = GroupClass::SBT; break;
    case Predicate::ss_permutable: cls = GroupClass::SST; break;
    case Predicate::nss_permutable: cls = GroupClass::NSST; break;
    default: throw UnknownRelation(std::string(predicate_name(relation)) + " does not define a group class");
  }
  const Group& g = v.g();
  const Bitset& subs = g.subgroups_of(v.ambient);
  std::optional<ClassCounterexample> found;
  subs.for_each([&](SubgroupId h) {
    if (found || holds(v, h, relation)) return;
    subs.for_each([&](SubgroupId k) {
      if (found || k == h || k == v.ambient || !g.contains(k, h)) return;
      if (holds(v, k, relation) && holds(v.within(k), h, relation)) {
        ClassCounterexample ce;
        ce.h = h;
        ce.k = k;
        ce.reason = std::string("H is ") + predicate_name(relation) + " in K and K in G, but H is not in G";
        found = std::move(ce);
      }
    });
  });
  return {cls, Via::bruteforce, tri(!found), found};
}

ClassVerdict is_pst_characterization(GroupView v) {
  constexpr auto c = GroupClass::PST;
  if (!solvable(v)) return not_applicable(c);
  const Group& g = v.g();
  const SubgroupId l = nilpotent_residual(v);
  if (!is_abelian(v.within(l))) return fail(c, Via::characterization, l, "nilpotent residual is not abelian");
  if (std::gcd(g.size_of(l), v.order() / g.size_of(l)) != 1)
    return fail(c, Via::characterization, l, "nilpotent residual is not a Hall subgroup");
  if (!acts_by_power_automorphisms(v, l))
    return fail(c, Via::characterization, l, "conjugation on the nilpotent residual is not a power map");
  return make(c, Via::characterization, true);
}

ClassVerdict is_bt_characterization(GroupView v) {
  ClassVerdict pst = is_pst_characterization(v);
  pst.cls = GroupClass::BT;
  if (!pst.is_true()) return pst;
  const Group& g = v.g();
  const SubgroupId l = nilpotent_residual(v);
  std::vector<std::uint64_t> outside;
  for (auto p : pi(v))
    if (g.size_of(l) % p != 0) outside.push_back(p);
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) {
      for (SubgroupId a : g.sylows(v.ambient, outside[i])) {
        for (SubgroupId b : g.sylows(v.ambient, outside[j])) {
          if (g.commutator(a, b) != g.bottom()) {
            ClassVerdict out = fail(GroupClass::BT, Via::characterization, a,
                                    "Sylow subgroups for primes outside the residual do not commute");
            out.counterexample->other = b;
            return out;
          }
        }
      }
    }
  }
  return make(GroupClass::BT, Via::characterization, true);
}

ClassVerdict is_sst_characterization(GroupView v) {
  constexpr auto c = GroupClass::SST;
  if (!solvable(v)) return not_applicable(c);
  for (SubgroupId h : cyclic_prime_power_subgroups(v))
    if (!holds(v, h, Predicate::ss_permutable))
      return fail(c, Via::characterization, h, "cyclic subgroup of prime-power order is not SS-permutable");
  return make(c, Via::characterization, true);
}

ClassVerdict is_nilpotent(GroupView v) {
  const auto lower = lower_central_series(v);
  if (lower.terms.back() != v.g().bottom())
    return fail(GroupClass::nilpotent, Via::bruteforce, lower.terms.back(), "lower central series stalls");
  return make(GroupClass::nilpotent, Via::bruteforce, true);
}

ClassVerdict is_solvable(GroupView v) {
  const auto derived = derived_series(v);
  if (derived.terms.back() != v.g().bottom())
    return fail(GroupClass::solvable, Via::bruteforce, derived.terms.back(), "derived series stalls");
  return make(GroupClass::solvable, Via::bruteforce, true);
}

ClassVerdict is_sc(GroupView v) {
  const auto chief = chief_series(v);
  for (std::size_t i = 0; i + 1 < chief.terms.size(); ++i)
    if (!is_simple_factor(v.g(), chief.terms[i], chief.terms[i + 1]))
      return fail(GroupClass::SC, Via::bruteforce, chief.terms[i], "chief factor is not simple");
  return make(GroupClass::SC, Via::bruteforce, true);
}

ClassVerdict is_supersolvable(GroupView v) {
  const auto chief = chief_series(v);
  const auto orders = chief_factor_orders(v, chief);
  std::optional<std::size_t> bad;
  for (std::size_t i = 0; i < orders.size() && !bad; ++i)
    if (!is_prime(orders[i])) bad = i;
  const bool verdict = !bad;
  ensure(verdict == (solvable(v) && is_sc_group(v)), "supersolvable differs from solvable and SC");
  if (bad) return fail(GroupClass::supersolvable, Via::bruteforce, chief.terms[*bad], "chief factor of non-prime order");
  return make(GroupClass::supersolvable, Via::bruteforce, true);
}

bool has_elementary_abelian_sylows(GroupView v) {
  for (SubgroupId s : v.g().all_sylows(v.ambient))
    if (!is_elementary_abelian(v.g(), s)) return false;
  return true;
}

ClassVerdict is_complemented(GroupView v) {
  std::optional<SubgroupId> bad;
  v.g().subgroups_of(v.ambient).for_each([&](SubgroupId h) {
    if (!bad && complements(v, h).empty()) bad = h;
  });
  const bool hall = is_supersolvable(v).is_true() && has_elementary_abelian_sylows(v);
  ensure(!bad == hall, "complemented differs from supersolvable with elementary abelian Sylows");
  if (bad) return fail(GroupClass::complemented, Via::bruteforce, *bad, "subgroup without a complement");
  return make(GroupClass::complemented, Via::bruteforce, true);
}

ClassVerdict classify(GroupView v, GroupClass c) {
  switch (c) {
    case GroupClass::SC: return is_sc(v);
    case GroupClass::nilpotent: return is_nilpotent(v);
    case GroupClass::solvable: return is_solvable(v);
    case GroupClass::supersolvable: return is_supersolvable(v);
    case GroupClass::complemented: return is_complemented(v);
    default: return is_transitive_class(v, defining_relation(c));
  }
}

bool acts_by_power_automorphisms(GroupView v, SubgroupId n) {
  const Group& g = v.g();
  if (!is_normal(v, n)) throw NotNormal("subgroup " + std::to_string(n) + " is not normal");
  bool power = true;
  g.members(n).for_each([&](Element l) {
    if (!power) return;
    const Bitset& cyc = g.members(g.cyclic(l));
    g.members(v.ambient).for_each([&](Element x) {
      if (power && !cyc.test(g.table().conj(l, x))) power = false;
    });
  });
  bool all_normal = true;
  g.subgroups_of(n).for_each([&](SubgroupId h) {
    if (all_normal && !is_normal(v, h)) all_normal = false;
  });
  ensure(power == all_normal, "power-map test differs from normality of every subgroup");
  return power;
}

bool chief_factors_below_cyclic_and_G_isomorphic(GroupView v, SubgroupId n) {
  const Group& g = v.g();
  const auto& t = g.table();
  if (!is_normal(v, n)) throw NotNormal("subgroup " + std::to_string(n) + " is not normal");
  if (!is_p_group(g, n)) throw NotPGroup("subgroup " + std::to_string(n) + " is not a p-group");
  if (n == g.bottom()) return true;
  const std::uint64_t p = g.primes_of(n).front();

  // ascending chief series of the ambient group from 1 to n
  std::vector<SubgroupId> normals;
  for (SubgroupId m : normal_subgroups(v))
    if (g.contains(n, m)) normals.push_back(m);
  std::vector<SubgroupId> chain{g.bottom()};
  while (chain.back() != n) {
    const SubgroupId cur = chain.back();
    for (SubgroupId m : normals) {
      if (m == cur || !g.contains(m, cur)) continue;
      bool minimal = true;
      for (SubgroupId x : normals)
        if (x != m && x != cur && g.contains(x, cur) && g.contains(m, x)) minimal = false;
      if (minimal) {
        chain.push_back(m);
        break;
      }
    }
  }

  std::optional<std::vector<std::uint64_t>> reference;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const SubgroupId lower = chain[i];
    const SubgroupId upper = chain[i + 1];
    if (g.size_of(upper) / g.size_of(lower) != p) return false;
    Element m = 0;
    g.members(upper).for_each([&](Element x) {
      if (m == 0 && !g.members(lower).test(x)) m = x;
    });
    std::vector<std::uint64_t> action;
    g.members(v.ambient).for_each([&](Element x) {
      const Element c = t.conj(m, x);
      std::uint64_t k = 1;
      for (; k < p; ++k)
        if (g.members(lower).test(t.mul(t.pow(m, k), t.inv(c)))) break;
      ensure(k < p, "conjugate leaves the chief factor");
      action.push_back(k);
    });
    if (!reference) reference = std::move(action);
    else if (*reference != action) return false;
  }
  return true;
}

}  // namespace sst
