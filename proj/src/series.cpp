#include "sst/series.hpp"

#include <algorithm>

#include "sst/errors.hpp"
#include "sst/number_theory.hpp"
#include "sst/subgroups.hpp"

namespace sst {

const char* series_name(SeriesRecord::Kind kind) {
  switch (kind) {
    case SeriesRecord::Kind::derived: return "derived";
    case SeriesRecord::Kind::lower_central: return "lower_central";
    case SeriesRecord::Kind::upper_central: return "upper_central";
    case SeriesRecord::Kind::chief: return "chief";
    case SeriesRecord::Kind::normal_closure_chain: return "normal_closure_chain";
  }
  return "?";
}

SubgroupId derived_subgroup(GroupView v) { return v.g().commutator(v.ambient, v.ambient); }

SeriesRecord derived_series(GroupView v) {
  SeriesRecord s{SeriesRecord::Kind::derived, {v.ambient}};
  for (;;) {
    const SubgroupId next = v.g().commutator(s.terms.back(), s.terms.back());
    if (next == s.terms.back()) return s;
    s.terms.push_back(next);
  }
}

SeriesRecord lower_central_series(GroupView v) {
  SeriesRecord s{SeriesRecord::Kind::lower_central, {v.ambient}};
  for (;;) {
    const SubgroupId next = v.g().commutator(s.terms.back(), v.ambient);
    if (next == s.terms.back()) return s;
    s.terms.push_back(next);
  }
}

SeriesRecord upper_central_series(GroupView v) {
  const Group& g = v.g();
  const auto& t = g.table();
  SeriesRecord s{SeriesRecord::Kind::upper_central, {g.bottom()}};
  for (;;) {
    const Bitset& below = g.members(s.terms.back());
    Bitset next(g.order());
    g.members(v.ambient).for_each([&](Element a) {
      bool ok = true;
      g.members(v.ambient).for_each([&](Element b) {
        if (ok && !below.test(t.commutator(a, b))) ok = false;
      });
      if (ok) next.set(a);
    });
    const SubgroupId id = g.id_of(next);
    if (id == s.terms.back()) return s;
    s.terms.push_back(id);
  }
}

bool solvable(GroupView v) { return derived_series(v).terms.back() == v.g().bottom(); }

bool nilpotent(GroupView v) { return lower_central_series(v).terms.back() == v.g().bottom(); }

SubgroupId nilpotent_residual(GroupView v) { return lower_central_series(v).terms.back(); }

SubgroupId o_p(GroupView v, std::uint64_t p) {
  const Group& g = v.g();
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const auto& syl = g.sylows(v.ambient, p);
  SubgroupId out = g.bottom();
  if (!syl.empty()) {
    out = syl.front();
    for (SubgroupId s : syl) out = g.meet(out, s);
  }
  // largest normal p-subgroup by scan
  SubgroupId largest = g.bottom();
  for (SubgroupId n : normal_subgroups(v)) {
    if (p_part(g.size_of(n), p) == g.size_of(n) && g.size_of(n) > g.size_of(largest)) largest = n;
  }
  ensure(largest == out, "O_p: Sylow intersection differs from the largest normal p-subgroup");
  return out;
}

SubgroupId o_p_residual(GroupView v, std::uint64_t p) {
  const Group& g = v.g();
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::vector<Element> gens;
  g.members(v.ambient).for_each([&](Element x) {
    if (element_order(g.table(), x) % p != 0) gens.push_back(x);
  });
  const SubgroupId out = g.generated(gens);
  for (SubgroupId n : normal_subgroups(v)) {
    if (is_prime_power(v.order() / g.size_of(n)) && (v.order() / g.size_of(n)) % p == 0)
      ensure(g.contains(n, out), "O^p is not below every normal subgroup with p-quotient");
  }
  ensure(is_normal(v, out) && p_part(v.order(), p) * g.size_of(out) % v.order() == 0,
         "O^p does not have a p-group quotient");
  return out;
}

SubgroupId fitting(GroupView v) {
  SubgroupId out = v.g().bottom();
  for (auto p : pi(v)) out = v.g().join(out, o_p(v, p));
  return out;
}

std::vector<SubgroupId> components(GroupView v) {
  const Group& g = v.g();
  std::vector<SubgroupId> out;
  g.subgroups_of(v.ambient).for_each([&](SubgroupId q) {
    if (q == g.bottom() || g.commutator(q, q) != q) return;
    const SubgroupId z = center(v.within(q));
    if (z == q || !is_simple_factor(g, q, z)) return;
    if (is_subnormal(v, q)) out.push_back(q);
  });
  return out;
}

SubgroupId generalized_fitting(GroupView v) {
  SubgroupId out = fitting(v);
  for (SubgroupId q : components(v)) out = v.g().join(out, q);
  ensure(v.g().contains(out, fitting(v)), "F* does not contain F");
  return out;
}

SubgroupId frattini(GroupView v) {
  const Group& g = v.g();
  SubgroupId out = v.ambient;
  for (SubgroupId m : maximal_subgroups(v)) out = g.meet(out, m);
  ensure(is_normal(v, out), "Frattini subgroup is not normal");
  return out;
}

SubgroupId hypercenter(GroupView v) { return upper_central_series(v).terms.back(); }

bool is_simple_factor(const Group& g, SubgroupId upper, SubgroupId lower) {
  if (upper == lower) return false;
  bool simple = true;
  g.subgroups_of(upper).for_each([&](SubgroupId x) {
    if (!simple || x == upper || x == lower || !g.contains(x, lower)) return;
    if (g.is_normal_in(x, upper)) simple = false;
  });
  return simple;
}

SeriesRecord chief_series(GroupView v, TieBreak tie) {
  const Group& g = v.g();
  const auto normals = normal_subgroups(v);
  std::vector<SubgroupId> ascending{g.bottom()};
  while (ascending.back() != v.ambient) {
    const SubgroupId cur = ascending.back();
    std::vector<SubgroupId> minimal;
    for (SubgroupId m : normals) {
      if (m == cur || !g.contains(m, cur)) continue;
      bool is_min = true;
      for (SubgroupId x : normals) {
        if (x != m && x != cur && g.contains(x, cur) && g.contains(m, x)) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(m);
    }
    ensure(!minimal.empty(), "chief series: no minimal normal subgroup above the current term");
    ascending.push_back(tie == TieBreak::least ? minimal.front() : minimal.back());
  }
  std::reverse(ascending.begin(), ascending.end());
  return {SeriesRecord::Kind::chief, std::move(ascending)};
}

std::vector<std::size_t> chief_factor_orders(GroupView v, const SeriesRecord& chief) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < chief.terms.size(); ++i)
    out.push_back(v.g().size_of(chief.terms[i]) / v.g().size_of(chief.terms[i + 1]));
  return out;
}

bool is_sc_group(GroupView v, TieBreak tie) {
  const auto chief = chief_series(v, tie);
  for (std::size_t i = 0; i + 1 < chief.terms.size(); ++i)
    if (!is_simple_factor(v.g(), chief.terms[i], chief.terms[i + 1])) return false;
  return true;
}

namespace {

void search_systems(GroupView v, const std::vector<std::vector<SubgroupId>>& choices, SylowSystem& current,
                    std::vector<SylowSystem>& out, bool first_only) {
  if (current.size() == choices.size()) {
    out.push_back(current);
    return;
  }
  for (SubgroupId s : choices[current.size()]) {
    bool ok = true;
    for (SubgroupId t : current)
      if (!v.g().permutes(s, t)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(s);
    search_systems(v, choices, current, out, first_only);
    current.pop_back();
    if (first_only && !out.empty()) return;
  }
}

std::vector<SylowSystem> find_systems(GroupView v, bool first_only) {
  if (!solvable(v)) throw NotSolvable(v.g().name() + ": Sylow systems need a solvable group");
  std::vector<std::vector<SubgroupId>> choices;
  for (auto p : pi(v)) choices.push_back(v.g().sylows(v.ambient, p));
  std::vector<SylowSystem> out;
  SylowSystem current;
  search_systems(v, choices, current, out, first_only);
  ensure(!out.empty(), "no Sylow system found in a solvable group");
  return out;
}

}  // namespace

SylowSystem sylow_system(GroupView v) { return find_systems(v, true).front(); }

std::vector<SylowSystem> all_sylow_systems(GroupView v) { return find_systems(v, false); }

SubgroupId system_normalizer_of(GroupView v, const SylowSystem& system) {
  SubgroupId out = v.ambient;
  for (SubgroupId s : system) out = v.g().meet(out, normalizer(v, s));
  return out;
}

SubgroupId system_normalizer(GroupView v) {
  const SubgroupId d = system_normalizer_of(v, sylow_system(v));
  ensure(nilpotent(v.within(d)), "system normalizer is not nilpotent");
  return d;
}

std::vector<std::uint64_t> pi(GroupView v) { return prime_divisors(v.order()); }

std::uint64_t order_p_part(GroupView v, std::uint64_t p) { return p_part(v.order(), p); }

}  // namespace sst
