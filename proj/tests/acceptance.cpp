// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sst/catalog.hpp"
#include "sst/classes.hpp"
#include "sst/harness.hpp"
#include "sst/permutability.hpp"
#include "sst/report.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"
#include "support.hpp"

using namespace sst;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

bool is_solvable_entry(const EntryReport& e) {
  if (!e.group) return false;
  for (const auto& c : e.group->classes)
    if (c.cls == GroupClass::solvable && c.via == Via::bruteforce) return c.verdict == Tri::True;
  return false;
}

const TheoremReport* find_check(const EntryReport& e, TheoremId id) {
  for (const auto& c : e.checks)
    if (c.id == id) return &c;
  return nullptr;
}

// Every applicable instance of the ids passes; `applicable` counts them.
Outcome all_pass(const CatalogReport& r, std::initializer_list<TheoremId> ids, std::size_t min_applicable,
                 bool solvable_only = false) {
  Outcome o;
  for (auto id : ids) {
    std::size_t applicable = 0, checked = 0;
    for (const auto* list : {&r.entries, &r.products})
      for (const auto& e : *list) {
        if (e.error) {
          o.pass = false;
          o.detail += e.name + ": " + *e.error + "; ";
        }
        if (solvable_only && !e.factors.empty()) continue;
        if (solvable_only && !is_solvable_entry(e)) continue;
        const auto* c = find_check(e, id);
        if (!c) continue;
        ++checked;
        if (!c->applicable) continue;
        ++applicable;
        if (!c->pass) {
          o.pass = false;
          o.detail += std::string(theorem_name(id)) + " fails on " + e.name + "; ";
        }
      }
    if (applicable < min_applicable) {
      o.pass = false;
      o.detail += std::string(theorem_name(id)) + " applicable on only " + std::to_string(applicable) + "; ";
    }
    o.detail += std::string(theorem_name(id)) + " " + std::to_string(applicable) + "/" + std::to_string(checked) + " ";
  }
  return o;
}

Outcome require(bool ok, std::string detail) { return Outcome{ok, std::move(detail)}; }

}  // namespace

int main() {
  const auto manifest = standard_catalog();
  RunOptions options;
  options.cap = manifest.config.cap;
  CatalogReport full;
  double full_seconds = 0;
  auto full_run = [&]() -> const CatalogReport& {
    if (full.entries.empty()) {
      const auto t0 = Clock::now();
      full = run_catalog(manifest, options);
      full_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    }
    return full;
  };

  const std::vector<Criterion> criteria = {
      {1, "order 36 example: S-semipermutable, not SS-permutable", 5,
       [] {
         auto g = test::fixture("Ex1_2");
         const auto h = test::sub(g, {"y", "w"});
         const bool semi = is_s_semipermutable(g, h).verdict, ss = is_ss_permutable(g, h).verdict;
         return require(g.order() == 36 && semi && !ss,
                        "s_semi=" + std::to_string(semi) + " ss=" + std::to_string(ss));
       }},
      {2, "A4 in A5: SS-permutable via a Sylow 5, not NSS, not subnormal", 30,
       [] {
         auto g = test::fixture("Ex1_3");
         const auto a4 = test::sub(g, {"t3", "t4"});
         const auto ss = is_ss_permutable(g, a4);
         const bool sylow5 = ss.witness && g.size_of(*ss.witness) == 5;
         const bool nss = is_nss_permutable(g, a4).verdict, sub = is_subnormal(g, a4);
         return require(ss.verdict && sylow5 && !nss && !sub && g.subgroup_count() == 59,
                        "subgroups=" + std::to_string(g.subgroup_count()));
       }},
      {3, "order 20 example: PST, BT, not SST; residual <x>", 5,
       [] {
         auto g = test::fixture("Ex1_5");
         const bool pst = classify(g, GroupClass::PST).is_true(), bt = classify(g, GroupClass::BT).is_true();
         const bool sst = classify(g, GroupClass::SST).is_true();
         const bool ss = is_ss_permutable(g, test::sub(g, {"y^2"})).verdict;
         const bool residual = nilpotent_residual(g) == test::sub(g, {"x"});
         return require(pst && bt && !sst && !ss && residual, "");
       }},
      {4, "order 60 product: factors SST, product not SST at <zw>, product BT", 60,
       [] {
         auto g = test::fixture("Ex1_8");
         const auto g1 = test::sub(g, {"x", "z"}), g2 = test::sub(g, {"y", "w"});
         const bool s1 = is_transitive_class(GroupView{g, g1}, Predicate::ss_permutable).is_true();
         const bool s2 = is_transitive_class(GroupView{g, g2}, Predicate::ss_permutable).is_true();
         const auto ch = is_sst_characterization(g);
         const bool at_zw = ch.counterexample && ch.counterexample->h == test::sub(g, {"z w"});
         const bool sst = classify(g, GroupClass::SST).is_true(), bt = classify(g, GroupClass::BT).is_true();
         return require(s1 && s2 && !sst && at_zw && bt, "");
       }},
      {5, "check D agreement on every solvable catalog group", 900,
       [&] {
         const auto& r = full_run();
         std::size_t solvable = 0, max_order = 0;
         for (const auto& e : r.entries)
           if (is_solvable_entry(e)) {
             ++solvable;
             max_order = std::max(max_order, e.group->order);
           }
         auto o = all_pass(r, {TheoremId::D}, 20, true);
         o.pass = o.pass && solvable >= 20 && max_order <= 210;
         o.detail += "solvable groups " + std::to_string(solvable);
         return o;
       }},
      {6, "check T1_1 agreement on every solvable catalog group", 900,
       [&] { return all_pass(full_run(), {TheoremId::T1_1}, 20, true); }},
      {7, "SST implies SC on every catalog group", 900,
       [&] {
         auto o = all_pass(full_run(), {TheoremId::A}, 1);
         for (const auto& e : full_run().entries) {
           if (!e.group) continue;
           Tri sst = Tri::False, sc = Tri::False;
           for (const auto& c : e.group->classes) {
             if (c.via != Via::bruteforce) continue;
             if (c.cls == GroupClass::SST) sst = c.verdict;
             if (c.cls == GroupClass::SC) sc = c.verdict;
           }
           if (sst == Tri::True && sc != Tri::True) {
             o.pass = false;
             o.detail += "SST but not SC: " + e.name + "; ";
           }
         }
         return o;
       }},
      {8, "checks B and C agree, each exercised on at least 5 groups", 900,
       [&] { return all_pass(full_run(), {TheoremId::B, TheoremId::C}, 5); }},
      {9, "check E on every solvable SST catalog group", 900,
       [&] { return all_pass(full_run(), {TheoremId::E, TheoremId::CLASS_AGREEMENT}, 5); }},
      {10, "checks F, G, H, I, C1_4, C1_6 and C1_7", 900,
       [&] {
         return all_pass(full_run(),
                         {TheoremId::F, TheoremId::G, TheoremId::H, TheoremId::I, TheoremId::C1_4, TheoremId::C1_6,
                          TheoremId::C1_7},
                         1);
       }},
      {11, "lemma checks and the S-permutable implies subnormal check", 900,
       [&] {
         return all_pass(full_run(),
                         {TheoremId::L2_1, TheoremId::L2_2, TheoremId::L2_3, TheoremId::L2_4, TheoremId::L2_5,
                          TheoremId::L2_6, TheoremId::L2_7, TheoremId::L2_8, TheoremId::L3_1, TheoremId::KEGEL},
                         1);
       }},
      {12, "oracle equivalences and witness re-checks", 900,
       [&] { return all_pass(full_run(), {TheoremId::ORACLES, TheoremId::PREDICATE_LATTICE}, 20); }},
      {13, "catalog reports identical across worker counts", 900,
       [&] {
         RunOptions parallel = options;
         parallel.jobs = 4;
         const auto a = render(catalog_json(full_run()));
         const auto b = render(catalog_json(run_catalog(manifest, parallel)));
         return require(a == b, std::to_string(a.size()) + " bytes");
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("error: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    // Criteria sharing the full catalog run are timed against it.
    if (c.number >= 5) seconds = std::max(seconds, full_seconds);
    const bool timely = seconds < c.limit_seconds;
    const bool ok = o.pass && timely;
    all = all && ok;
    std::printf("%s %2d %s (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title, seconds,
                c.limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return all ? 0 : 1;
}
