#include "sst/harness.hpp"

#include <atomic>
#include <regex>
#include <thread>

#include "sst/errors.hpp"
#include "sst/number_theory.hpp"
#include "sst/permutability.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"

namespace sst {

bool EntryReport::pass() const {
  if (error) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& e : expectations)
    if (!e.matches()) return false;
  return true;
}

bool CatalogReport::pass() const {
  for (const auto& e : entries)
    if (!e.pass()) return false;
  for (const auto& p : products)
    if (!p.pass()) return false;
  return true;
}

std::map<std::string, SubgroupId> resolve_subjects(const Group& g, const std::vector<Subject>& subjects) {
  std::map<std::string, SubgroupId> out{{"G", g.top()}, {"1", g.bottom()}};
  for (const auto& s : subjects) {
    std::vector<Element> gens;
    for (const auto& w : s.words) gens.push_back(evaluate(g.table(), w));
    out[s.name] = g.generated(gens);
  }
  return out;
}

SubgroupId resolve_subgroup(const Group& g, const std::map<std::string, SubgroupId>& subjects,
                            const std::string& text) {
  if (auto it = subjects.find(text); it != subjects.end()) return it->second;
  std::vector<Element> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    gens.push_back(evaluate(g.table(), parse_word(part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return g.generated(gens);
}

ClassRecord record_of(const Group& g, const ClassVerdict& v) {
  ClassRecord r{v.cls, v.via, v.verdict, {}, {}};
  if (v.counterexample) {
    r.counterexample.emplace_back("H", describe(g, v.counterexample->h));
    if (v.counterexample->k) r.counterexample.emplace_back("K", describe(g, *v.counterexample->k));
    if (v.counterexample->other) r.counterexample.emplace_back("other", describe(g, *v.counterexample->other));
    r.reason = v.counterexample->reason;
  }
  return r;
}

GroupSummary summarize(const Group& g) {
  GroupSummary s{g.name(), g.order(), pi(g), g.subgroup_count(), {}};
  for (GroupClass c : kAllClasses) s.classes.push_back(record_of(g, classify(g, c)));
  s.classes.push_back(record_of(g, is_pst_characterization(g)));
  s.classes.push_back(record_of(g, is_bt_characterization(g)));
  s.classes.push_back(record_of(g, is_sst_characterization(g)));
  return s;
}

namespace {

std::optional<SubgroupId> characteristic(const Group& g, const std::string& op) {
  if (op == "nilpotent_residual") return nilpotent_residual(g);
  if (op == "fitting") return fitting(g);
  if (op == "generalized_fitting") return generalized_fitting(g);
  if (op == "frattini") return frattini(g);
  if (op == "hypercenter") return hypercenter(g);
  if (op == "center") return center(g);
  if (op == "derived") return derived_subgroup(g);
  if (op == "system_normalizer") return system_normalizer(g);
  static const std::regex op_p(R"(O_(\d+))");
  std::smatch m;
  if (std::regex_match(op, m, op_p)) return o_p(g, std::stoull(m[1]));
  return std::nullopt;
}

std::optional<ClassVerdict> characterization(const Group& g, GroupClass c) {
  switch (c) {
    case GroupClass::PST: return is_pst_characterization(g);
    case GroupClass::BT: return is_bt_characterization(g);
    case GroupClass::SST: return is_sst_characterization(g);
    default: return std::nullopt;
  }
}

bool decide_key(const Group& g, const std::map<std::string, SubgroupId>& subjects, const std::string& key,
                const std::vector<TheoremReport>& checks) {
  static const std::regex check_re(R"(check\.(\w+))");
  static const std::regex count_re(R"((order|subgroups)==(\d+))");
  static const std::regex equal_re(R"((\w+)==(.+))");
  static const std::regex counter_re(R"((\w+)\.counterexample==(.+))");
  static const std::regex charac_re(R"((\w+)\.characterization)");
  static const std::regex witness_re(R"((\w+)\.witness_sylow_(\d+)\((.+)\))");
  static const std::regex sylow_re(R"(sylow_(\d+)\((.+)\))");
  static const std::regex call_re(R"((\w+)\((.+)\))");
  static const std::regex bare_re(R"(\w+)");
  auto subject = [&](const std::string& s) { return resolve_subgroup(g, subjects, s); };
  std::smatch m;

  if (std::regex_match(key, m, check_re)) {
    const auto id = parse_theorem(m[1].str());
    if (!id) throw ParseError("unknown check " + m[1].str());
    for (const auto& r : checks)
      if (r.id == *id) return r.pass;
    return run_check(g, *id).pass;
  }
  if (std::regex_match(key, m, count_re))
    return (m[1] == "order" ? g.order() : g.subgroup_count()) == std::stoull(m[2]);
  if (std::regex_match(key, m, counter_re)) {
    const auto c = parse_class(m[1].str());
    if (!c) throw ParseError("unknown class " + m[1].str());
    auto v = characterization(g, *c);
    if (!v || !v->counterexample) v = classify(g, *c);
    return v->counterexample && v->counterexample->h == subject(m[2]);
  }
  if (std::regex_match(key, m, charac_re)) {
    const auto c = parse_class(m[1].str());
    const auto v = c ? characterization(g, *c) : std::nullopt;
    if (!v) throw ParseError("no characterization for " + m[1].str());
    if (v->verdict == Tri::NotApplicable) throw NotSolvable("characterization needs a solvable group");
    return v->is_true();
  }
  if (std::regex_match(key, m, witness_re)) {
    const auto p = parse_predicate(m[1].str());
    if (!p) throw ParseError("unknown predicate " + m[1].str());
    const auto v = evaluate(g, subject(m[3]), *p);
    const auto& syl = g.sylows(g.top(), std::stoull(m[2]));
    return v.witness && std::find(syl.begin(), syl.end(), *v.witness) != syl.end();
  }
  if (std::regex_match(key, m, sylow_re)) {
    const auto& syl = g.sylows(g.top(), std::stoull(m[1]));
    return std::find(syl.begin(), syl.end(), subject(m[2])) != syl.end();
  }
  if (std::regex_match(key, m, equal_re)) {
    const auto id = characteristic(g, m[1].str());
    if (!id) throw ParseError("unknown subgroup operator " + m[1].str());
    return *id == subject(m[2]);
  }
  if (std::regex_match(key, m, call_re)) {
    if (const auto p = parse_predicate(m[1].str())) return holds(g, subject(m[2]), *p);
    if (const auto c = parse_class(m[1].str())) return classify(GroupView(g, subject(m[2])), *c).is_true();
    throw ParseError("unknown predicate or class " + m[1].str());
  }
  if (std::regex_match(key, bare_re)) {
    if (const auto c = parse_class(key)) return classify(g, *c).is_true();
  }
  throw ParseError("unrecognized expectation \"" + key + "\"");
}

}  // namespace

ExpectationResult evaluate_expectation(const Group& g, const std::map<std::string, SubgroupId>& subjects,
                                       const std::string& key, bool expected,
                                       const std::vector<TheoremReport>& checks) {
  ExpectationResult r{key, expected, std::nullopt, {}};
  try {
    r.actual = decide_key(g, subjects, key, checks);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

namespace {

Group build(const GroupSpec& spec, const RunOptions& options) {
  BuildOptions b;
  b.order_cap = options.cap;
  b.validation = options.validation;
  return Group(build_from_spec(spec, b), options.cap);
}

}  // namespace

EntryReport run_entry(const ManifestEntry& entry, const std::vector<TheoremId>& checks, const RunOptions& options) {
  EntryReport r;
  r.name = entry.name;
  try {
    const Group g = build(entry.spec, options);
    const auto subjects = resolve_subjects(g, entry.subjects);
    r.group = summarize(g);
    for (TheoremId id : checks)
      if (!is_product_check(id)) r.checks.push_back(run_check(g, id));
    for (const auto& [key, value] : entry.expected)
      r.expectations.push_back(evaluate_expectation(g, subjects, key, value, r.checks));
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

EntryReport run_product(const ProductEntry& product, const CatalogManifest& manifest, const RunOptions& options) {
  EntryReport r;
  r.name = product.name;
  r.factors = product.factors;
  try {
    std::vector<GroupSpec> specs;
    for (const auto& f : product.factors)
      for (const auto& e : manifest.entries)
        if (e.name == f) specs.push_back(e.spec);
    std::vector<Group> factors;
    for (const auto& s : specs) factors.push_back(build(s, options));
    const Group g = build(GroupSpec::direct(specs).with_name(product.name), options);
    std::vector<const Group*> ptrs;
    for (const auto& f : factors) ptrs.push_back(&f);
    r.group = summarize(g);
    r.checks.push_back(check_theorem_G(ptrs, g));
    r.checks.push_back(check_theorem_H(ptrs, g));
    const auto subjects = resolve_subjects(g, {});
    for (const auto& [key, value] : product.expected)
      r.expectations.push_back(evaluate_expectation(g, subjects, key, value, r.checks));
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

CatalogReport run_catalog(const CatalogManifest& manifest, const RunOptions& options) {
  CatalogReport report;
  report.entries.resize(manifest.entries.size());
  report.products.resize(manifest.products.size());
  const std::size_t total = manifest.entries.size() + manifest.products.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      if (i < manifest.entries.size())
        report.entries[i] = run_entry(manifest.entries[i], manifest.config.checks, options);
      else
        report.products[i - manifest.entries.size()] =
            run_product(manifest.products[i - manifest.entries.size()], manifest, options);
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace sst
