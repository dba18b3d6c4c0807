#include "sst/permutability.hpp"

#include <numeric>

#include "sst/errors.hpp"
#include "sst/number_theory.hpp"
#include "sst/subgroups.hpp"

namespace sst {

namespace {

constexpr SubgroupId kNone = ~SubgroupId{0};

struct Outcome {
  bool verdict = true;
  SubgroupId a = kNone;
  SubgroupId b = kNone;
};

bool coprime(std::size_t a, std::size_t b) { return std::gcd(a, b) == 1; }

// First X in `candidates` (ascending) with filter(X) and !permutes(h, X).
template <class Range, class Filter>
Outcome permutes_with_all(const Group& g, SubgroupId h, const Range& candidates, Filter filter) {
  for (SubgroupId x : candidates)
    if (filter(x) && !g.permutes(h, x)) return {false, x, kNone};
  return {};
}

std::vector<SubgroupId> ids_of(const Bitset& b) {
  std::vector<SubgroupId> out;
  b.for_each([&](std::size_t i) { out.push_back(static_cast<SubgroupId>(i)); });
  return out;
}

// First Sylow subgroup of k not permuting with h.
std::optional<SubgroupId> failing_sylow(const Group& g, SubgroupId h, SubgroupId k) {
  for (SubgroupId s : g.all_sylows(k))
    if (!g.permutes(h, s)) return s;
  return std::nullopt;
}

Outcome supplement_scan(GroupView v, SubgroupId h, bool normal) {
  const Group& g = v.g();
  std::optional<Outcome> first_failure;
  for (SubgroupId k : supplements(v, h)) {
    if (normal && !g.is_normal_in(k, v.ambient)) continue;
    const auto bad = failing_sylow(g, h, k);
    if (!bad) return {true, k, kNone};
    if (!first_failure) first_failure = Outcome{false, k, *bad};
  }
  ensure(first_failure.has_value(), "the ambient group is always a normal supplement");
  return *first_failure;
}

Outcome decide(GroupView v, SubgroupId h, Predicate p) {
  const Group& g = v.g();
  switch (p) {
    case Predicate::normal: {
      Outcome out;
      g.members(v.ambient).for_each([&](Element x) {
        if (out.verdict && g.conjugate(h, x) != h) out = {false, g.conjugate(h, x), x};
      });
      return out;
    }
    case Predicate::permutable:
      return permutes_with_all(g, h, ids_of(g.subgroups_of(v.ambient)), [](SubgroupId) { return true; });
    case Predicate::s_permutable:
      return permutes_with_all(g, h, g.all_sylows(v.ambient), [](SubgroupId) { return true; });
    case Predicate::semipermutable:
      return permutes_with_all(g, h, ids_of(g.subgroups_of(v.ambient)),
                               [&](SubgroupId x) { return coprime(g.size_of(h), g.size_of(x)); });
    case Predicate::s_semipermutable:
      return permutes_with_all(g, h, g.all_sylows(v.ambient),
                               [&](SubgroupId x) { return coprime(g.size_of(h), g.size_of(x)); });
    case Predicate::ss_permutable:
      return supplement_scan(v, h, false);
    case Predicate::nss_permutable:
      return supplement_scan(v, h, true);
    case Predicate::tau_quasinormal: {
      const std::size_t order_h = g.size_of(h);
      for (auto prime : g.primes_of(v.ambient)) {
        if (order_h % prime == 0) continue;
        for (SubgroupId s : g.sylows(v.ambient, prime)) {
          if (coprime(order_h, g.size_of(normal_closure(v, s)))) continue;
          if (!g.permutes(h, s)) return {false, s, kNone};
        }
      }
      return {};
    }
    case Predicate::abnormal: {
      Outcome out;
      g.members(v.ambient).for_each([&](Element x) {
        if (!out.verdict) return;
        const SubgroupId j = g.join(h, g.conjugate(h, x));
        if (!g.members(j).test(x)) out = {false, j, x};
      });
      return out;
    }
    case Predicate::subnormal: {
      SubgroupId cur = v.ambient;
      while (cur != h) {
        const SubgroupId next = relative_normal_closure(g, h, cur);
        if (next == cur) return {false, cur, kNone};
        cur = next;
      }
      return {};
    }
  }
  throw InternalError("unhandled predicate");
}

bool has_inner(Predicate p) { return p == Predicate::ss_permutable || p == Predicate::nss_permutable; }
bool has_element(Predicate p) { return p == Predicate::normal || p == Predicate::abnormal; }

}  // namespace

const char* predicate_name(Predicate p) {
  switch (p) {
    case Predicate::normal: return "normal";
    case Predicate::permutable: return "permutable";
    case Predicate::s_permutable: return "s_permutable";
    case Predicate::semipermutable: return "semipermutable";
    case Predicate::s_semipermutable: return "s_semipermutable";
    case Predicate::ss_permutable: return "ss_permutable";
    case Predicate::nss_permutable: return "nss_permutable";
    case Predicate::tau_quasinormal: return "tau_quasinormal";
    case Predicate::abnormal: return "abnormal";
    case Predicate::subnormal: return "subnormal";
  }
  return "?";
}

std::optional<Predicate> parse_predicate(std::string_view text) {
  for (Predicate p : kAllPredicates)
    if (text == predicate_name(p)) return p;
  if (text == "s") return Predicate::s_permutable;
  if (text == "semi") return Predicate::semipermutable;
  if (text == "s_semi") return Predicate::s_semipermutable;
  if (text == "ss") return Predicate::ss_permutable;
  if (text == "nss") return Predicate::nss_permutable;
  if (text == "tau") return Predicate::tau_quasinormal;
  return std::nullopt;
}

PredicateVerdict evaluate(GroupView v, SubgroupId h, Predicate p) {
  const Group& g = v.g();
  if (!g.contains(v.ambient, h))
    throw NotSubgroup("subgroup " + std::to_string(h) + " is not contained in the ambient group");
  Group::Memo& m = g.memo(static_cast<std::size_t>(p), h, v.ambient);
  if (m.state < 0) {
    const Outcome o = decide(v, h, p);
    m.state = o.verdict ? 1 : 0;
    m.a = o.a;
    m.b = o.b;
  }
  PredicateVerdict out{p, h, v.ambient, m.state == 1, std::nullopt, std::nullopt};
  if (out.verdict) {
    if (has_inner(p)) out.witness = m.a;
  } else {
    Refutation r;
    r.subgroup = m.a;
    if (has_inner(p)) r.inner = m.b;
    if (has_element(p)) r.element = m.b;
    out.refutation = r;
  }
  return out;
}

bool holds(GroupView v, SubgroupId h, Predicate p) { return evaluate(v, h, p).verdict; }

PredicateVerdict is_permutable(GroupView v, SubgroupId h) { return evaluate(v, h, Predicate::permutable); }
PredicateVerdict is_s_permutable(GroupView v, SubgroupId h) { return evaluate(v, h, Predicate::s_permutable); }
PredicateVerdict is_semipermutable(GroupView v, SubgroupId h) { return evaluate(v, h, Predicate::semipermutable); }
PredicateVerdict is_s_semipermutable(GroupView v, SubgroupId h) {
  return evaluate(v, h, Predicate::s_semipermutable);
}
PredicateVerdict is_ss_permutable(GroupView v, SubgroupId h) { return evaluate(v, h, Predicate::ss_permutable); }
PredicateVerdict is_nss_permutable(GroupView v, SubgroupId h) { return evaluate(v, h, Predicate::nss_permutable); }
PredicateVerdict is_tau_quasinormal(GroupView v, SubgroupId h) {
  return evaluate(v, h, Predicate::tau_quasinormal);
}
PredicateVerdict is_abnormal(GroupView v, SubgroupId h) { return evaluate(v, h, Predicate::abnormal); }

bool is_ss_supplement(GroupView v, SubgroupId h, SubgroupId k, bool normal) {
  const Group& g = v.g();
  if (!g.contains(v.ambient, k) || !g.contains(v.ambient, h)) return false;
  if (g.product_size(h, k) != v.order()) return false;
  if (normal && !g.is_normal_in(k, v.ambient)) return false;
  return !failing_sylow(g, h, k).has_value();
}

std::vector<SubgroupId> ss_supplements(GroupView v, SubgroupId h, bool normal) {
  std::vector<SubgroupId> out;
  for (SubgroupId k : supplements(v, h))
    if (is_ss_supplement(v, h, k, normal)) out.push_back(k);
  return out;
}

bool recheck(GroupView v, const PredicateVerdict& verdict) {
  const Group& g = v.g();
  const SubgroupId h = verdict.subject;
  switch (verdict.predicate) {
    case Predicate::ss_permutable:
    case Predicate::nss_permutable: {
      const bool normal = verdict.predicate == Predicate::nss_permutable;
      if (verdict.verdict)
        return verdict.witness && is_ss_supplement(v, h, *verdict.witness, normal);
      if (!verdict.refutation || !verdict.refutation->inner) return false;
      const SubgroupId k = verdict.refutation->subgroup;
      const SubgroupId s = *verdict.refutation->inner;
      return g.product_size(h, k) == v.order() && g.contains(k, s) && !g.permutes(h, s);
    }
    case Predicate::normal:
      if (verdict.verdict) return is_normal(v, h);
      return verdict.refutation && verdict.refutation->element &&
             g.conjugate(h, *verdict.refutation->element) != h;
    case Predicate::abnormal:
      if (verdict.verdict) return decide(v, h, Predicate::abnormal).verdict;
      return verdict.refutation && verdict.refutation->element &&
             !g.members(g.join(h, g.conjugate(h, *verdict.refutation->element)))
                  .test(*verdict.refutation->element);
    case Predicate::subnormal:
      if (verdict.verdict) return is_subnormal(v, h);
      return verdict.refutation && relative_normal_closure(g, h, verdict.refutation->subgroup) ==
                                       verdict.refutation->subgroup &&
             verdict.refutation->subgroup != h;
    default:
      if (verdict.verdict) return decide(v, h, verdict.predicate).verdict;
      return verdict.refutation && !g.permutes(h, verdict.refutation->subgroup);
  }
}

std::vector<NormalizerPairVerdict> ss_permutable_in_normalizer_pairs(GroupView v, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const Group& g = v.g();
  std::vector<SubgroupId> p_subgroups;
  g.subgroups_of(v.ambient).for_each([&](SubgroupId k) {
    if (p_part(g.size_of(k), p) == g.size_of(k)) p_subgroups.push_back(k);
  });
  std::vector<NormalizerPairVerdict> out;
  for (SubgroupId k : p_subgroups) {
    const GroupView nk = v.within(normalizer(v, k));
    for (SubgroupId h : p_subgroups) {
      if (!g.contains(k, h)) continue;
      out.push_back({h, k, is_ss_permutable(nk, h), is_nss_permutable(nk, h)});
    }
  }
  return out;
}

}  // namespace sst
