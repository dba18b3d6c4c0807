#include <numeric>

#include "doctest.h"
#include "sst/errors.hpp"
#include "sst/number_theory.hpp"
#include "sst/permutability.hpp"
#include "sst/subgroups.hpp"
#include "support.hpp"

using namespace sst;

namespace {

// Naive predicate oracle over the lattice of the whole group; Sylow
// subgroups are found by order alone.
struct Naive {
  const Group& g;

  std::vector<SubgroupId> sylows_in(SubgroupId k) const {
    std::vector<SubgroupId> out;
    for (auto p : prime_divisors(g.size_of(k)))
      for (SubgroupId s = 0; s < g.subgroup_count(); ++s)
        if (g.contains(k, s) && g.size_of(s) == p_part(g.size_of(k), p)) out.push_back(s);
    return out;
  }
  bool permutes_all(SubgroupId h, const std::vector<SubgroupId>& xs) const {
    for (auto x : xs)
      if (!test::naive_permutes(g, h, x)) return false;
    return true;
  }
  bool coprime(SubgroupId a, SubgroupId b) const { return std::gcd(g.size_of(a), g.size_of(b)) == 1; }

  bool permutable(SubgroupId h) const {
    for (SubgroupId k = 0; k < g.subgroup_count(); ++k)
      if (!test::naive_permutes(g, h, k)) return false;
    return true;
  }
  bool s_permutable(SubgroupId h) const { return permutes_all(h, sylows_in(g.top())); }
  bool semipermutable(SubgroupId h) const {
    for (SubgroupId k = 0; k < g.subgroup_count(); ++k)
      if (coprime(h, k) && !test::naive_permutes(g, h, k)) return false;
    return true;
  }
  bool s_semipermutable(SubgroupId h) const {
    for (auto s : sylows_in(g.top()))
      if (coprime(h, s) && !test::naive_permutes(g, h, s)) return false;
    return true;
  }
  bool supplemented(SubgroupId h, bool normal) const {
    for (SubgroupId k = 0; k < g.subgroup_count(); ++k) {
      if (g.product_size(h, k) != g.order()) continue;
      if (normal && !test::naive_normal(g, k)) continue;
      if (permutes_all(h, sylows_in(k))) return true;
    }
    return false;
  }
  bool tau(SubgroupId h) const {
    for (auto s : sylows_in(g.top())) {
      if (!coprime(h, s)) continue;
      if (std::gcd(g.size_of(h), g.size_of(normal_closure(g, s))) == 1) continue;
      if (!test::naive_permutes(g, h, s)) return false;
    }
    return true;
  }
  bool abnormal(SubgroupId h) const {
    for (Element x = 0; x < g.order(); ++x)
      if (!g.members(g.join(h, g.conjugate(h, x))).test(x)) return false;
    return true;
  }

  bool decide(SubgroupId h, Predicate p) const {
    switch (p) {
      case Predicate::normal: return test::naive_normal(g, h);
      case Predicate::permutable: return permutable(h);
      case Predicate::s_permutable: return s_permutable(h);
      case Predicate::semipermutable: return semipermutable(h);
      case Predicate::s_semipermutable: return s_semipermutable(h);
      case Predicate::ss_permutable: return supplemented(h, false);
      case Predicate::nss_permutable: return supplemented(h, true);
      case Predicate::tau_quasinormal: return tau(h);
      case Predicate::abnormal: return abnormal(h);
      case Predicate::subnormal: return is_subnormal(g, h);
    }
    return false;
  }
};

}  // namespace

TEST_CASE("order 36 example") {
  auto g = test::fixture("Ex1_2");
  const auto h = test::sub(g, {"y", "w"});
  CHECK(g.size_of(h) == 6);
  CHECK(is_s_semipermutable(g, h).verdict);
  const auto ss = is_ss_permutable(g, h);
  CHECK_FALSE(ss.verdict);
  CHECK_FALSE(ss.witness.has_value());
}

TEST_CASE("A4 in A5") {
  auto g = test::fixture("Ex1_3");
  const auto a4 = test::sub(g, {"t3", "t4"});
  REQUIRE(g.size_of(a4) == 12);
  const auto ss = is_ss_permutable(g, a4);
  CHECK(ss.verdict);
  REQUIRE(ss.witness.has_value());
  CHECK(g.size_of(*ss.witness) == 5);
  CHECK(recheck(g, ss));
  CHECK_FALSE(is_nss_permutable(g, a4).verdict);
  CHECK_FALSE(is_subnormal(g, a4));
  CHECK_FALSE(holds(g, a4, Predicate::subnormal));
}

TEST_CASE("order 20 example") {
  auto g = test::fixture("Ex1_5");
  const auto l = test::sub(g, {"y^2"});
  const auto v = is_ss_permutable(g, l);
  CHECK_FALSE(v.verdict);
  REQUIRE(v.refutation.has_value());
  CHECK(recheck(g, v));
  CHECK(is_s_semipermutable(g, l).verdict);
}

TEST_CASE("every predicate agrees with the naive oracle") {
  for (const auto& e : standard_catalog().entries) {
    auto g = test::make(e.spec);
    if (g.order() > 60) continue;
    CAPTURE(e.name);
    const Naive naive{g};
    for (SubgroupId h = 0; h < g.subgroup_count(); ++h)
      for (auto p : kAllPredicates) {
        CAPTURE(predicate_name(p));
        CAPTURE(h);
        const auto v = evaluate(g, h, p);
        CHECK(v.verdict == naive.decide(h, p));
        CHECK(recheck(g, v));
      }
  }
}

TEST_CASE("implications between predicates hold on every subgroup") {
  for (const char* name : {"S4", "S5", "Ex1_2", "Ex1_8", "S3xC35", "C7:C6"}) {
    auto g = test::entry(name);
    CAPTURE(name);
    for (SubgroupId h = 0; h < g.subgroup_count(); ++h) {
      auto at = [&](Predicate p) { return holds(g, h, p); };
      if (at(Predicate::normal)) CHECK(at(Predicate::permutable));
      if (at(Predicate::permutable)) CHECK(at(Predicate::s_permutable));
      if (at(Predicate::permutable)) CHECK(at(Predicate::semipermutable));
      if (at(Predicate::s_permutable)) CHECK(at(Predicate::s_semipermutable));
      if (at(Predicate::semipermutable)) CHECK(at(Predicate::s_semipermutable));
      if (at(Predicate::s_permutable)) CHECK(at(Predicate::ss_permutable));
      if (at(Predicate::nss_permutable)) CHECK(at(Predicate::ss_permutable));
      if (at(Predicate::s_permutable)) CHECK(at(Predicate::subnormal));
      if (at(Predicate::s_semipermutable)) CHECK(at(Predicate::tau_quasinormal));
      if (h != g.top() && at(Predicate::normal)) CHECK_FALSE(at(Predicate::abnormal));
    }
  }
}

TEST_CASE("predicates relative to a subgroup") {
  auto g = test::entry("S4");
  SubgroupId a4 = g.bottom();
  for (auto n : normal_subgroups(g))
    if (g.size_of(n) == 12) a4 = n;
  const GroupView v{g, a4};
  for (SubgroupId h = 0; h < g.subgroup_count(); ++h) {
    if (!g.contains(a4, h)) {
      CHECK_THROWS_AS(evaluate(v, h, Predicate::normal), NotSubgroup);
      continue;
    }
    CHECK(holds(v, h, Predicate::normal) == g.contains(g.normalizer(h), a4));
  }
}

TEST_CASE("normalizer pairs") {
  auto g = test::entry("S4");
  for (auto p : {2ull, 3ull})
    for (const auto& pair : ss_permutable_in_normalizer_pairs(g, p)) {
      const auto n = normalizer(g, pair.k);
      CHECK(g.contains(pair.k, pair.h));
      CHECK(pair.ss.ambient == n);
      if (pair.nss.verdict) CHECK(pair.ss.verdict);
    }
  CHECK_THROWS_AS(ss_permutable_in_normalizer_pairs(g, 4), NotPrime);
}

TEST_CASE("predicate names round trip") {
  for (auto p : kAllPredicates) CHECK(parse_predicate(predicate_name(p)) == p);
  CHECK(parse_predicate("ss") == Predicate::ss_permutable);
  CHECK(parse_predicate("tau") == Predicate::tau_quasinormal);
  CHECK_FALSE(parse_predicate("bogus").has_value());
}
