#include "sst/report.hpp"

namespace sst {

Json to_json(const SubgroupRef& ref) {
  Json j;
  j["id"] = ref.id;
  j["order"] = ref.order;
  j["generators"] = ref.generators;
  return j;
}

namespace {

Json named_refs(const std::vector<std::pair<std::string, SubgroupRef>>& refs) {
  Json j = Json::object();
  for (const auto& [name, ref] : refs) j[name] = to_json(ref);
  return j;
}

Json counterexample_json(const Counterexample& ce) {
  Json j;
  j["statement"] = ce.statement;
  j["description"] = ce.description;
  j["subgroups"] = named_refs(ce.subgroups);
  if (ce.element) j["element"] = *ce.element;
  return j;
}

}  // namespace

Json to_json(const TheoremReport& report) {
  Json j;
  j["theorem_id"] = theorem_name(report.id);
  j["group_name"] = report.group_name;
  j["applicable"] = report.applicable;
  j["pass"] = report.pass;
  j["statements"] = Json::array();
  for (const auto& s : report.statements) {
    Json st;
    st["label"] = s.label;
    st["value"] = tri_name(s.value);
    if (s.instances) st["instances"] = s.instances;
    j["statements"].push_back(std::move(st));
  }
  j["counterexamples"] = Json::array();
  for (const auto& ce : report.counterexamples) j["counterexamples"].push_back(counterexample_json(ce));
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

Json to_json(const ClassRecord& record) {
  Json j;
  j["class"] = class_name(record.cls);
  j["via"] = via_name(record.via);
  j["verdict"] = tri_name(record.verdict);
  if (!record.counterexample.empty()) {
    j["counterexample"] = named_refs(record.counterexample);
    j["reason"] = record.reason;
  }
  return j;
}

Json to_json(const GroupSummary& summary) {
  Json j;
  j["name"] = summary.name;
  j["order"] = summary.order;
  j["pi"] = summary.pi;
  j["subgroup_count"] = summary.subgroup_count;
  j["class_verdicts"] = Json::array();
  for (const auto& c : summary.classes) j["class_verdicts"].push_back(to_json(c));
  return j;
}

Json to_json(const ExpectationResult& result) {
  Json j;
  j["key"] = result.key;
  j["expected"] = result.expected;
  j["actual"] = result.actual ? Json(*result.actual) : Json(nullptr);
  j["match"] = result.matches();
  if (!result.error.empty()) j["error"] = result.error;
  return j;
}

Json to_json(const Group& g, const PredicateVerdict& verdict) {
  Json j;
  j["predicate"] = predicate_name(verdict.predicate);
  j["subject"] = to_json(describe(g, verdict.subject));
  j["ambient"] = to_json(describe(g, verdict.ambient));
  j["verdict"] = verdict.verdict;
  if (verdict.witness) j["witness"] = to_json(describe(g, *verdict.witness));
  if (verdict.refutation) {
    Json r;
    r["subgroup"] = to_json(describe(g, verdict.refutation->subgroup));
    if (verdict.refutation->inner) r["inner"] = to_json(describe(g, *verdict.refutation->inner));
    if (verdict.refutation->element) r["element"] = element_name(g, *verdict.refutation->element);
    j["refutation"] = std::move(r);
  }
  if (verdict.predicate == Predicate::abnormal) j["convention"] = "x in <H, H^x> for every x";
  return j;
}

Json entry_json(const EntryReport& entry) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["name"] = entry.name;
  if (!entry.factors.empty()) j["factors"] = entry.factors;
  if (entry.error) j["error"] = *entry.error;
  j["group"] = entry.group ? to_json(*entry.group) : Json(nullptr);
  j["checks"] = Json::array();
  j["counterexamples"] = Json::array();
  for (const auto& c : entry.checks) {
    j["checks"].push_back(to_json(c));
    if (!c.pass)
      for (const auto& ce : c.counterexamples) {
        Json cj = counterexample_json(ce);
        cj["theorem_id"] = theorem_name(c.id);
        j["counterexamples"].push_back(std::move(cj));
      }
  }
  j["expectations"] = Json::array();
  for (const auto& e : entry.expectations) j["expectations"].push_back(to_json(e));
  j["pass"] = entry.pass();
  return j;
}

Json catalog_json(const CatalogReport& report) {
  Json j;
  j["tool_version"] = kToolVersion;
  std::size_t checks = 0, failed = 0, not_applicable = 0, mismatches = 0, errors = 0;
  auto tally = [&](const EntryReport& e) {
    if (e.error) ++errors;
    for (const auto& c : e.checks) {
      ++checks;
      if (!c.pass) ++failed;
      if (!c.applicable) ++not_applicable;
    }
    for (const auto& x : e.expectations)
      if (!x.matches()) ++mismatches;
  };
  j["entries"] = Json::array();
  for (const auto& e : report.entries) {
    tally(e);
    Json ej = entry_json(e);
    ej.erase("tool_version");
    j["entries"].push_back(std::move(ej));
  }
  j["products"] = Json::array();
  for (const auto& p : report.products) {
    tally(p);
    Json pj = entry_json(p);
    pj.erase("tool_version");
    j["products"].push_back(std::move(pj));
  }
  Json s;
  s["entries"] = report.entries.size();
  s["products"] = report.products.size();
  s["errors"] = errors;
  s["checks_run"] = checks;
  s["checks_failed"] = failed;
  s["checks_not_applicable"] = not_applicable;
  s["expectation_mismatches"] = mismatches;
  s["pass"] = report.pass();
  j["summary"] = std::move(s);
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sst
