#include <map>

#include "doctest.h"
#include "sst/oracles.hpp"
#include "sst/subgroups.hpp"
#include "support.hpp"

using namespace sst;

namespace {

// Subgroup counts computed by the naive closure oracle in support.hpp and
// frozen; S5 and S3xC35 are out of the oracle's range and use the values of
// the join-closure oracle.
const std::map<std::string, std::size_t> kSubgroupCounts = {
    {"C1", 1},     {"C2", 2},      {"C4", 3},      {"C6", 4},      {"C8", 4},      {"C9", 3},       {"C12", 6},
    {"C35", 4},    {"V4", 5},      {"C2xC4", 8},   {"C2^3", 16},   {"C3xC3", 6},   {"C2xC6", 10},   {"C6xC6", 30},
    {"D8", 10},    {"Q8", 6},      {"D10", 8},     {"D12", 16},    {"S3", 6},      {"S4", 30},      {"A4", 10},
    {"S5", 156},   {"A5", 59},     {"C3:C4", 8},   {"C7:C3", 10},  {"C7:C6", 26},  {"Ex1_2", 60},   {"Ex1_3", 59},
    {"Ex1_5", 14}, {"Ex1_8", 72},  {"Ex1_8_G1", 6}, {"Ex1_8_G2", 8}, {"S3xC35", 24}, {"C3xS3", 14}, {"S3xS3", 60}};

}  // namespace

TEST_CASE("lattice sizes match the frozen oracle values") {
  for (const auto& e : standard_catalog().entries) {
    CAPTURE(e.name);
    auto g = test::make(e.spec);
    REQUIRE(kSubgroupCounts.count(e.name) == 1);
    CHECK(g.subgroup_count() == kSubgroupCounts.at(e.name));
  }
}

TEST_CASE("lattice equals the naive closure oracle up to order 60") {
  for (const auto& e : standard_catalog().entries) {
    auto g = test::make(e.spec);
    if (g.order() > 60) continue;
    CAPTURE(e.name);
    const auto naive = test::naive_subgroups(g.table());
    std::set<std::vector<bool>> ours;
    for (SubgroupId h = 0; h < g.subgroup_count(); ++h) ours.insert(test::members_of(g, h));
    CHECK(ours == naive);
  }
}

TEST_CASE("library oracles agree with the lattice") {
  for (const char* name : {"S3", "D8", "Q8", "C2^3", "A4", "C3:C4", "C2xC6"}) {
    auto g = test::entry(name);
    CAPTURE(name);
    CHECK(lattice_matches(g, powerset_subgroups(g.table())));
    CHECK(lattice_matches(g, join_closure_subgroups(g.table())));
  }
}

TEST_CASE("lattice order and containment invariants") {
  auto g = test::entry("S4");
  CHECK(g.size_of(g.bottom()) == 1);
  CHECK(g.size_of(g.top()) == 24);
  for (SubgroupId a = 0; a < g.subgroup_count(); ++a) {
    CHECK(g.order() % g.size_of(a) == 0);
    for (SubgroupId b = 0; b < g.subgroup_count(); ++b) {
      const auto j = g.join(a, b), m = g.meet(a, b);
      CHECK(g.contains(j, a));
      CHECK(g.contains(j, b));
      CHECK(g.contains(a, m));
      CHECK(g.members(m) == (g.members(a) & g.members(b)));
      CHECK(g.permutes(a, b) == test::naive_permutes(g, a, b));
      CHECK(g.permutes(a, b) == (g.product_size(a, b) == g.size_of(j)));
    }
  }
}

TEST_CASE("normality agrees with conjugation") {
  for (const char* name : {"S4", "Ex1_2", "Q8", "Ex1_5"}) {
    auto g = test::entry(name);
    for (SubgroupId h = 0; h < g.subgroup_count(); ++h) CHECK(is_normal(g, h) == test::naive_normal(g, h));
  }
  auto s4 = test::entry("S4");
  CHECK(normal_subgroups(s4).size() == 4);
  CHECK(maximal_subgroups(s4).size() == 8);
}

TEST_CASE("Sylow and Hall subgroups") {
  auto s4 = test::entry("S4");
  CHECK(sylow_subgroups(s4, 2).size() == 3);
  CHECK(sylow_subgroups(s4, 3).size() == 4);
  CHECK(sylow_subgroups(s4, 5).empty());
  auto a5 = test::entry("A5");
  CHECK(sylow_subgroups(a5, 5).size() == 6);
  CHECK(sylow_subgroups(a5, 2).size() == 5);
  auto c7c6 = test::entry("C7:C6");
  CHECK(hall_subgroups(c7c6, {2, 3}).size() == 7);
}

TEST_CASE("subnormality") {
  auto d8 = test::entry("D8");
  for (SubgroupId h = 0; h < d8.subgroup_count(); ++h) CHECK(is_subnormal(d8, h));
  auto s4 = test::entry("S4");
  std::size_t subnormal = 0;
  for (SubgroupId h = 0; h < s4.subgroup_count(); ++h) subnormal += is_subnormal(s4, h);
  // 1, the three involutions of V4, V4, A4, S4
  CHECK(subnormal == 7);
}

TEST_CASE("views restrict to a subgroup") {
  auto s4 = test::entry("S4");
  SubgroupId alt = s4.bottom();
  for (auto n : normal_subgroups(s4))
    if (s4.size_of(n) == 12) alt = n;
  REQUIRE(s4.size_of(alt) == 12);
  const GroupView v{s4, alt};
  CHECK(normal_subgroups(v).size() == 3);
  CHECK(sylow_subgroups(v, 3).size() == 4);
  CHECK(is_abelian(GroupView{s4, sylow_subgroups(s4, 3).front()}));
}
