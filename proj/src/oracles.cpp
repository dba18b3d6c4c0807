#include "sst/oracles.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "check_support.hpp"
#include "sst/errors.hpp"
#include "sst/lattice.hpp"

namespace sst {

std::vector<Bitset> powerset_subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n > kPowersetLimit) throw OrderCapExceeded("powerset oracle is limited to order 16");
  std::vector<Bitset> out;
  // identity is in every subgroup: enumerate subsets of the other elements
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<Element> elems;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    elems.assign(1, 0);
    for (std::size_t i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) elems.push_back(static_cast<Element>(i));
    bool closed = true;
    Bitset members(n);
    for (Element e : elems) members.set(e);
    for (std::size_t i = 0; i < elems.size() && closed; ++i)
      for (std::size_t j = 0; j < elems.size() && closed; ++j)
        if (!members.test(g.mul(elems[i], elems[j]))) closed = false;
    if (closed) out.push_back(std::move(members));
  }
  return out;
}

std::vector<Bitset> join_closure_subgroups(const GroupTable& g) {
  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> all;
  for (Element x = 0; x < g.order(); ++x) {
    Bitset c = generated_subgroup(g, std::span<const Element>(&x, 1));
    if (seen.insert(c).second) all.push_back(std::move(c));
  }
  const std::size_t cyclic_count = all.size();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < cyclic_count; ++j) {
      std::vector<Element> seed = all[i].to_vector();
      const auto extra = all[j].to_vector();
      seed.insert(seed.end(), extra.begin(), extra.end());
      Bitset joined = generated_subgroup(g, seed);
      if (seen.insert(joined).second) all.push_back(std::move(joined));
    }
  }
  return all;
}

bool lattice_matches(const Group& g, const std::vector<Bitset>& oracle) {
  if (oracle.size() != g.subgroup_count()) return false;
  for (const Bitset& b : oracle)
    if (!g.lattice().find(b)) return false;
  return true;
}

SubgroupId largest_normal_p_subgroup(GroupView v, std::uint64_t p) {
  const Group& g = v.g();
  SubgroupId best = g.bottom();
  for (SubgroupId n : normal_subgroups(v))
    if (p_part(g.size_of(n), p) == g.size_of(n) && g.contains(n, best)) best = n;
  return best;
}

SubgroupId least_normal_with_nilpotent_quotient(const Group& g) {
  SubgroupId best = g.top();
  for (SubgroupId n : normal_subgroups(g)) {
    if (!nilpotent(*g.quotient(n).group)) continue;
    if (g.size_of(n) < g.size_of(best)) best = n;
  }
  return best;
}

SubgroupId non_generators(const Group& g) {
  // x is a non-generator iff <S, x> = G implies <S> = G for every subgroup S
  Bitset out(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const SubgroupId cx = g.cyclic(x);
    bool non_gen = true;
    g.subgroups_of(g.top()).for_each([&](SubgroupId s) {
      if (non_gen && s != g.top() && g.join(s, cx) == g.top()) non_gen = false;
    });
    if (non_gen) out.set(x);
  }
  return g.id_of(out);
}

TheoremReport check_oracles(const Group& g) {
  using detail::example;
  using detail::Tally;
  auto r = detail::start(TheoremId::ORACLES, g);

  Tally lattice("subgroup lattice equals an independent enumeration");
  const auto oracle = g.order() <= kPowersetLimit ? powerset_subgroups(g.table()) : join_closure_subgroups(g.table());
  lattice.record(lattice_matches(g, oracle), [&] { return example("lattice differs from oracle"); });
  lattice.finish(r);

  Tally op("O_p equals the largest normal p-subgroup");
  Tally residual_p("O^p is the least normal subgroup with p-group quotient");
  for (auto p : g.primes_of(g.top())) {
    bool ok = true;
    try {
      ok = o_p(g, p) == largest_normal_p_subgroup(g, p);
    } catch (const InternalError&) {
      ok = false;
    }
    op.record(ok, [&] { return example("O_" + std::to_string(p) + " characterizations differ"); });
    bool ok2 = true;
    try {
      o_p_residual(g, p);
    } catch (const InternalError&) {
      ok2 = false;
    }
    residual_p.record(ok2, [&] { return example("O^" + std::to_string(p) + " characterizations differ"); });
  }
  op.finish(r);
  residual_p.finish(r);

  Tally residual("nilpotent residual equals the least normal subgroup with nilpotent quotient");
  residual.record(nilpotent_residual(g) == least_normal_with_nilpotent_quotient(g),
                  [&] { return example("nilpotent residual differs"); });
  residual.finish(r);

  Tally frat("Frattini subgroup equals the set of non-generators");
  frat.record(frattini(g) == non_generators(g), [&] { return example("Frattini subgroup differs"); });
  frat.finish(r);

  Tally chief("chief series under both tie-breaks agree on SC and factor orders");
  {
    auto least = chief_factor_orders(g, chief_series(g, TieBreak::least));
    auto greatest = chief_factor_orders(g, chief_series(g, TieBreak::greatest));
    std::sort(least.begin(), least.end());
    std::sort(greatest.begin(), greatest.end());
    chief.record(least == greatest && is_sc_group(g, TieBreak::least) == is_sc_group(g, TieBreak::greatest),
                 [&] { return example("chief series choices disagree"); });
  }
  chief.finish(r);

  Tally super("supersolvable iff solvable and SC");
  bool super_ok = true;
  try {
    super_ok = is_supersolvable(g).is_true() == (solvable(g) && is_sc_group(g));
  } catch (const InternalError&) {
    super_ok = false;
  }
  super.record(super_ok, [&] { return example("supersolvability characterizations differ"); });
  super.finish(r);

  Tally systems("system normalizers are conjugate");
  if (solvable(g)) {
    const auto all = all_sylow_systems(g);
    const SubgroupId d0 = system_normalizer_of(g, all.front());
    for (const auto& s : all) {
      const SubgroupId d = system_normalizer_of(g, s);
      systems.record(g.lattice().conjugacy_class_of(d) == g.lattice().conjugacy_class_of(d0),
                     [&] { return example("system normalizers not conjugate", {{"D", describe(g, d)}}); });
    }
  }
  systems.finish(r);

  Tally witnesses("every stored verdict re-checks from its witness or refutation");
  g.subgroups_of(g.top()).for_each([&](SubgroupId h) {
    for (Predicate p : kAllPredicates) {
      const auto v = evaluate(g, h, p);
      witnesses.record(recheck(g, v), [&] {
        return example(std::string("verdict for ") + predicate_name(p) + " fails its re-check", {{"H", describe(g, h)}});
      });
    }
  });
  witnesses.finish(r);

  detail::settle_all_hold(r);
  return r;
}

}  // namespace sst
