#include "doctest.h"
#include "sst/classes.hpp"
#include "sst/cli.hpp"
#include "sst/constructions.hpp"
#include "sst/errors.hpp"
#include "sst/harness.hpp"
#include "sst/permutability.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"
#include "sst/theorems.hpp"
#include "support.hpp"

using namespace sst;
using test::elt;
using test::sub;

namespace {

std::size_t count_of_order(const std::vector<SubgroupId>& xs, const Group& g, std::size_t order) {
  std::size_t n = 0;
  for (auto x : xs) n += g.size_of(x) == order;
  return n;
}

bool all_values(const TheoremReport& r, Tri v) {
  for (const auto& s : r.statements)
    if (s.value != Tri::NotApplicable && s.value != v) return false;
  return true;
}

}  // namespace

TEST_CASE("table construction vectors") {
  const auto one = cyclic_group(1);
  CHECK(one.order() == 1);
  CHECK(element_order(one, 0) == 1);
  const auto s3 = symmetric_group(3);
  const auto d = direct_product(cyclic_group(1), s3);
  CHECK(d.order() == 6);
  CHECK(d.raw_table() == s3.raw_table());
  const auto c15 = direct_product(cyclic_group(3), cyclic_group(5));
  for (Element x = 0; x < 15; ++x) {
    CHECK(15 % element_order(c15, x) == 0);
    for (Element y = 0; y < 15; ++y) CHECK(c15.mul(x, y) == c15.mul(y, x));
  }
  auto g = test::make(GroupSpec::symmetric(3));
  auto q = quotient(g.table(), g.members(g.bottom()));
  CHECK(q.table.order() == 6);
  auto a3 = sylow_subgroups(g, 3).front();
  CHECK(quotient(g.table(), g.members(a3)).table.order() == 2);
  CHECK(element_order(g.table(), elt(g, "c")) == 3);
  auto ex = test::fixture("Ex1_5");
  auto qx = quotient(ex.table(), ex.members(sub(ex, {"x"})));
  REQUIRE(qx.table.order() == 4);
  CHECK(element_order(qx.table, qx.projection[elt(ex, "y")]) == 4);
  CHECK(verify_relations(g.table(), {}));
  auto c5 = test::make(GroupSpec::cyclic(5));
  CHECK_FALSE(verify_relations(c5.table(), {parse_word("g^3")}));
  auto ex8 = test::make(GroupSpec::direct({GroupSpec::symmetric(3), GroupSpec::dihedral(5)}));
  CHECK(ex8.order() == 60);
}

TEST_CASE("subgroup generation vectors") {
  auto g = test::fixture("Ex1_2");
  CHECK(g.generated({}) == g.bottom());
  CHECK(g.size_of(sub(g, {"y", "w"})) == 6);
  std::vector<Element> all(g.order());
  for (Element x = 0; x < g.order(); ++x) all[x] = x;
  CHECK(g.generated(all) == g.top());
  for (auto p : {2u, 3u, 5u, 7u}) CHECK(test::make(GroupSpec::cyclic(p)).subgroup_count() == 2);
}

TEST_CASE("Sylow, Hall and normalizer vectors") {
  auto s3 = test::entry("S3");
  CHECK(sylow_subgroups(s3, 3).size() == 1);
  CHECK(sylow_subgroups(s3, 2).size() == 3);
  CHECK(hall_subgroups(s3, {2}) == sylow_subgroups(s3, 2));
  CHECK(hall_subgroups(s3, {2, 3}) == std::vector<SubgroupId>{s3.top()});
  auto ex = test::fixture("Ex1_5");
  CHECK(sylow_subgroups(ex, 5) == std::vector<SubgroupId>{sub(ex, {"x"})});
  auto a5 = test::entry("A5");
  const auto h = hall_subgroups(a5, {2, 3});
  CHECK(h.size() == 5);
  CHECK(count_of_order(h, a5, 12) == 5);
  auto e2 = test::fixture("Ex1_2");
  CHECK(normalizer(e2, e2.top()) == e2.top());
  CHECK_FALSE(e2.members(normalizer(e2, sub(e2, {"y"}))).test(elt(e2, "z")));
  const auto t = sub(s3, {"s"});
  CHECK(core(s3, t) == s3.bottom());
  const auto a3 = sylow_subgroups(s3, 3).front();
  CHECK(relative_normal_closure(s3, t, a3) == s3.top());
  CHECK(relative_normal_closure(s3, t, s3.bottom()) == t);
  CHECK(relative_normal_closure(s3, a3, s3.top()) == a3);
  CHECK(commutator_subgroup(s3, s3.top(), s3.top()) == a3);
  auto c6 = test::entry("C6");
  CHECK(commutator_subgroup(c6, c6.top(), c6.top()) == c6.bottom());
  auto e8 = test::fixture("Ex1_8");
  CHECK(commutator_subgroup(e8, sub(e8, {"z"}), sub(e8, {"y"})) == e8.bottom());
  CHECK(is_subnormal(s3, s3.top()));
  const auto comps = complements(s3, a3);
  CHECK(comps.size() == 3);
  CHECK(count_of_order(comps, s3, 2) == 3);
  const auto t2 = sub(s3, {"s^c"});
  CHECK(s3.permutes(t, t));
  CHECK_FALSE(s3.permutes(t, t2));
  CHECK(s3.permutes(t, a3));
}

TEST_CASE("series vectors") {
  auto c12 = test::entry("C12");
  CHECK(derived_series(c12).terms.size() == 2);
  auto s3 = test::entry("S3");
  const auto d = derived_series(s3);
  REQUIRE(d.terms.size() == 3);
  CHECK(s3.size_of(d.terms[1]) == 3);
  auto a5 = test::entry("A5");
  CHECK(derived_subgroup(a5) == a5.top());
  CHECK(nilpotent_residual(test::entry("D8")) == test::entry("D8").bottom());
  auto e8 = test::fixture("Ex1_8");
  const auto g1 = sub(e8, {"x", "z"}), g2 = sub(e8, {"y", "w"});
  CHECK(nilpotent_residual(GroupView{e8, g1}) == sub(e8, {"x"}));
  CHECK(nilpotent_residual(GroupView{e8, g2}) == sub(e8, {"y"}));
  CHECK(o_p(s3, 5) == s3.bottom());
  CHECK(o_p_residual(s3, 5) == s3.top());
  auto ex = test::fixture("Ex1_5");
  CHECK(o_p(ex, 2) == ex.bottom());
  auto q8 = test::entry("Q8");
  CHECK(fitting(q8) == q8.top());
  CHECK(generalized_fitting(q8) == q8.top());
  CHECK(frattini(test::entry("C2^3")) == test::entry("C2^3").bottom());
  auto c4 = test::entry("C4");
  CHECK(c4.size_of(frattini(c4)) == 2);
  auto c3c4 = test::entry("C3:C4");
  CHECK(frattini(c3c4) == sub(c3c4, {"y^2"}));
  CHECK(hypercenter(c3c4) == sub(c3c4, {"y^2"}));
  CHECK(hypercenter(s3) == s3.bottom());
  CHECK(hypercenter(q8) == q8.top());
  CHECK(is_sc_group(test::entry("C2")));
  CHECK(system_normalizer(q8) == q8.top());
  CHECK(s3.size_of(system_normalizer(s3)) == 2);
  CHECK(system_normalizer(s3) == sylow_subgroups(s3, 2).front());
  CHECK(system_normalizer(ex) == sub(ex, {"y"}));
  CHECK(pi(test::entry("C1")).empty());
}

TEST_CASE("predicate vectors") {
  auto s3 = test::entry("S3");
  const auto t = sub(s3, {"s"});
  const auto a3 = sylow_subgroups(s3, 3).front();
  CHECK(is_permutable(s3, a3).verdict);
  CHECK(is_s_permutable(s3, a3).verdict);
  CHECK_FALSE(is_s_permutable(s3, t).verdict);
  CHECK(is_s_semipermutable(s3, t).verdict);
  CHECK(is_s_semipermutable(s3, s3.top()).verdict);
  CHECK(is_tau_quasinormal(s3, t).verdict);
  CHECK(is_tau_quasinormal(s3, s3.top()).verdict);
  CHECK(is_abnormal(s3, t).verdict);
  CHECK(is_abnormal(s3, s3.top()).verdict);
  CHECK_FALSE(is_abnormal(s3, a3).verdict);
  const auto whole = is_nss_permutable(s3, s3.top());
  CHECK(whole.verdict);
  REQUIRE(whole.witness.has_value());
  CHECK(*whole.witness == s3.bottom());
  auto d8 = test::entry("D8");
  for (SubgroupId h = 0; h < d8.subgroup_count(); ++h) {
    CHECK(is_nss_permutable(d8, h).verdict);
    CHECK(is_ss_supplement(d8, h, d8.top(), true));
  }
  auto s4 = test::entry("S4");
  for (const auto& pair : ss_permutable_in_normalizer_pairs(s4, 2))
    if (pair.h == pair.k && s4.size_of(pair.k) == 8) CHECK(pair.ss.verdict);
  auto a5 = test::entry("A5");
  const auto a4 = hall_subgroups(a5, {2, 3}).front();
  const auto sups = ss_supplements(a5, a4, false);
  std::size_t sylow5 = 0;
  for (auto k : sups) sylow5 += a5.size_of(k) == 5;
  CHECK(sylow5 == 6);
  const auto normal_sups = ss_supplements(a5, a4, true);
  CHECK(normal_sups.empty());
}

TEST_CASE("class vectors") {
  auto ex = test::fixture("Ex1_5");
  CHECK_FALSE(is_transitive_class(ex, Predicate::ss_permutable).is_true());
  CHECK(is_transitive_class(ex, Predicate::s_semipermutable).is_true());
  auto c6 = test::entry("C6xC6");
  for (auto c : {GroupClass::T, GroupClass::PT, GroupClass::PST, GroupClass::BT, GroupClass::SBT, GroupClass::SST,
                 GroupClass::NSST})
    CHECK(is_transitive_class(c6, defining_relation(c)).is_true());
  CHECK(is_pst_characterization(test::entry("D8")).is_true());
  CHECK(is_bt_characterization(test::entry("D8")).is_true());
  const auto s4 = is_pst_characterization(test::entry("S4"));
  CHECK(s4.verdict == Tri::False);
  CHECK(s4.counterexample.has_value());
  CHECK(is_bt_characterization(test::fixture("Ex1_8")).is_true());
  CHECK(is_sst_characterization(test::entry("S3")).is_true());
  auto s4g = test::entry("S4");
  CHECK(is_solvable(s4g).is_true());
  CHECK_FALSE(is_supersolvable(s4g).is_true());
  CHECK_FALSE(is_nilpotent(s4g).is_true());
  auto a5 = test::entry("A5");
  CHECK_FALSE(is_solvable(a5).is_true());
  CHECK_FALSE(is_supersolvable(a5).is_true());
  CHECK_FALSE(is_nilpotent(a5).is_true());
  CHECK(is_complemented(test::entry("V4")).is_true());
  auto s3 = test::entry("S3");
  CHECK(acts_by_power_automorphisms(s3, s3.bottom()));
  CHECK(acts_by_power_automorphisms(s3, sylow_subgroups(s3, 3).front()));
  auto e2 = test::fixture("Ex1_2");
  CHECK_FALSE(acts_by_power_automorphisms(e2, sub(e2, {"x", "y"})));
  auto d8 = test::entry("D8");
  const auto rot = sub(d8, {"r"});
  REQUIRE(d8.size_of(rot) == 4);
  CHECK(chief_factors_below_cyclic_and_G_isomorphic(d8, rot));
  CHECK(chief_factors_below_cyclic_and_G_isomorphic(s3, sylow_subgroups(s3, 3).front()));
}

TEST_CASE("theorem check vectors") {
  auto ex = test::fixture("Ex1_5");
  const auto t11 = check_theorem_1_1(ex);
  CHECK(t11.pass);
  CHECK(all_values(t11, Tri::True));
  auto s4 = test::entry("S4");
  const auto t11s4 = check_theorem_1_1(s4);
  CHECK(t11s4.pass);
  CHECK(all_values(t11s4, Tri::False));
  CHECK(all_values(check_theorem_1_1(test::entry("C6xC6")), Tri::True));
  CHECK(check_theorem_A(test::entry("S3")).pass);
  CHECK(check_theorem_A(s4).pass);
  CHECK_FALSE(is_transitive_class(s4, Predicate::ss_permutable).is_true());
  CHECK(check_theorem_A(test::entry("C1")).pass);
  const auto b3 = check_theorem_B(test::entry("S3"));
  CHECK(b3.pass);
  CHECK(all_values(b3, Tri::True));
  const auto b4 = check_theorem_B(s4);
  CHECK(b4.pass);
  CHECK(all_values(b4, Tri::False));
  CHECK(all_values(check_theorem_B(test::entry("D8")), Tri::True));
  const auto d = check_theorem_D(ex);
  CHECK(d.pass);
  CHECK(d.statements.size() == 8);
  CHECK(all_values(d, Tri::False));
  for (const char* name : {"S3", "C3:C4"}) {
    const auto e = check_theorem_E(test::entry(name));
    CHECK(e.applicable);
    CHECK(e.pass);
  }
  CHECK(check_lemma_2_5(ex).pass);
  CHECK(check_lemma_2_6(test::entry("S3")).pass);
  const auto l27 = check_lemma_2_7(ex);
  CHECK(l27.applicable);
  CHECK(l27.pass);
}

TEST_CASE("catalog run vectors") {
  const auto empty = parse_manifest("{}", catalog_dir());
  const auto r = run_catalog(empty, {});
  CHECK(r.entries.empty());
  CHECK(r.pass());
  const auto m = parse_manifest(R"({"config":{"checks":["D"]},"entries":[
      {"name":"ok","spec":{"kind":"cyclic","n":4}},
      {"name":"corrupt","spec":{"kind":"semidirect","kernel":{"kind":"cyclic","n":6,"labels":["x"]},
        "actor":{"kind":"cyclic","n":2,"labels":["y"]},"action":{"y":{"x":"x^2"}}}},
      {"name":"also_ok","spec":{"kind":"symmetric","n":3}}]})",
                                catalog_dir());
  const auto run = run_catalog(m, {});
  REQUIRE(run.entries.size() == 3);
  CHECK(run.entries[0].pass());
  CHECK(run.entries[1].error.has_value());
  CHECK(run.entries[2].pass());
}

TEST_CASE("spec parsing vectors") {
  const auto one = parse_group_spec_text(R"({"kind":"cyclic","n":1})");
  CHECK(one == GroupSpec::cyclic(1));
  const auto fx = load_fixture(catalog_dir() / "groups" / "Ex1_2.json");
  CHECK(build_from_spec(fx.spec).order() == 36);
}
