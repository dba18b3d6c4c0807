#include <algorithm>

#include "doctest.h"
#include "sst/errors.hpp"
#include "sst/number_theory.hpp"
#include "sst/oracles.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"
#include "support.hpp"

using namespace sst;

TEST_CASE("derived and central series") {
  auto s4 = test::entry("S4");
  const auto d = derived_series(s4);
  REQUIRE(d.terms.size() == 4);
  CHECK(s4.size_of(d.terms[1]) == 12);
  CHECK(s4.size_of(d.terms[2]) == 4);
  CHECK(s4.size_of(d.terms[3]) == 1);
  CHECK(solvable(s4));
  CHECK_FALSE(nilpotent(s4));
  CHECK_FALSE(solvable(test::entry("A5")));
  auto d8 = test::entry("D8");
  CHECK(nilpotent(d8));
  CHECK(d8.size_of(upper_central_series(d8).terms.back()) == 8);
  CHECK(d8.size_of(lower_central_series(d8).terms.back()) == 1);
}

TEST_CASE("characteristic subgroups of small groups") {
  auto s4 = test::entry("S4");
  CHECK(s4.size_of(fitting(s4)) == 4);
  CHECK(s4.size_of(frattini(s4)) == 1);
  CHECK(s4.size_of(nilpotent_residual(s4)) == 12);
  CHECK(s4.size_of(hypercenter(s4)) == 1);
  CHECK(s4.size_of(o_p(s4, 2)) == 4);
  CHECK(s4.size_of(o_p(s4, 3)) == 1);
  CHECK(s4.size_of(o_p_residual(s4, 2)) == 12);
  CHECK(s4.size_of(o_p_residual(s4, 3)) == 24);
  auto a5 = test::entry("A5");
  CHECK(a5.size_of(fitting(a5)) == 1);
  CHECK(a5.size_of(generalized_fitting(a5)) == 60);
  CHECK(components(a5).size() == 1);
  auto q8 = test::entry("Q8");
  CHECK(q8.size_of(frattini(q8)) == 2);
  CHECK(q8.size_of(center(q8)) == 2);
  auto c3c4 = test::entry("C3:C4");
  CHECK(c3c4.size_of(frattini(c3c4)) == 2);
  auto ex = test::fixture("Ex1_5");
  CHECK(nilpotent_residual(ex) == test::sub(ex, {"x"}));
}

TEST_CASE("dual characterizations agree on every catalog group") {
  for (const auto& e : standard_catalog().entries) {
    auto g = test::make(e.spec);
    CAPTURE(e.name);
    for (auto p : g.primes_of(g.top())) {
      CHECK(o_p(g, p) == largest_normal_p_subgroup(g, p));
      // O^p(G) is the least normal subgroup with a p-group quotient
      SubgroupId least = g.top();
      for (auto n : normal_subgroups(g)) {
        const auto index = g.order() / g.size_of(n);
        const bool p_index = index == 1 || (is_prime_power(index) && prime_of_power(index) == p);
        if (p_index && g.size_of(n) < g.size_of(least)) least = n;
      }
      CHECK(o_p_residual(g, p) == least);
    }
    CHECK(nilpotent_residual(g) == least_normal_with_nilpotent_quotient(g));
    CHECK(frattini(g) == non_generators(g));
    CHECK(g.contains(fitting(g), frattini(g)));
    CHECK(g.contains(generalized_fitting(g), fitting(g)));
  }
}

TEST_CASE("chief series are maximal normal series with tie-break independent factor orders") {
  for (const char* name : {"S4", "Ex1_2", "C6xC6", "D12", "A5", "S5"}) {
    auto g = test::entry(name);
    CAPTURE(name);
    const auto lo = chief_series(g, TieBreak::least);
    const auto hi = chief_series(g, TieBreak::greatest);
    CHECK(lo.terms.front() == g.top());
    CHECK(lo.terms.back() == g.bottom());
    auto a = chief_factor_orders(g, lo), b = chief_factor_orders(g, hi);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    for (std::size_t i = 0; i + 1 < lo.terms.size(); ++i) {
      CHECK(is_normal(g, lo.terms[i + 1]));
      for (auto n : normal_subgroups(g))
        CHECK_FALSE((n != lo.terms[i] && n != lo.terms[i + 1] && g.contains(lo.terms[i], n) &&
                     g.contains(n, lo.terms[i + 1])));
    }
  }
  auto s4 = test::entry("S4");
  CHECK(chief_factor_orders(s4, chief_series(s4)) == std::vector<std::size_t>{2, 3, 4});
}

TEST_CASE("SC groups") {
  CHECK(is_sc_group(test::entry("S3")));
  CHECK(is_sc_group(test::entry("A5")));
  CHECK(is_sc_group(test::entry("S5")));
  CHECK_FALSE(is_sc_group(test::entry("S4")));
  CHECK_FALSE(is_sc_group(test::entry("A4")));
}

TEST_CASE("Sylow systems and system normalizers") {
  auto s4 = test::entry("S4");
  const auto d = system_normalizer(s4);
  CHECK(s4.size_of(d) == 2);
  const auto all = all_sylow_systems(s4);
  CHECK(all.size() == 12);
  for (const auto& s : all) {
    const auto di = system_normalizer_of(s4, s);
    CHECK(s4.size_of(di) == 2);
  }
  CHECK_THROWS_AS(all_sylow_systems(test::entry("A5")), NotSolvable);
  auto c6 = test::entry("C6xC6");
  CHECK(system_normalizer(c6) == c6.top());
  auto ex = test::fixture("Ex1_5");
  CHECK(ex.size_of(system_normalizer(ex)) == 4);
}

TEST_CASE("prime data") {
  auto g = test::entry("S3xC35");
  CHECK(pi(g) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(order_p_part(g, 3) == 3);
  CHECK(order_p_part(g, 11) == 1);
}
