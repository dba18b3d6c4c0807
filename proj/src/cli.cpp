#include "sst/cli.hpp"

#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>

#include "sst/errors.hpp"
#include "sst/harness.hpp"
#include "sst/report.hpp"
#include "sst/series.hpp"
#include "sst/subgroups.hpp"

namespace sst {

namespace {

struct Settings {
  std::optional<std::size_t> cap;
  std::optional<std::size_t> jobs;
  std::optional<std::uint64_t> seed;
  std::string json_path;
};

RunOptions run_options(const Settings& s, const CatalogConfig* config) {
  RunOptions o;
  if (config) {
    o.cap = config->cap;
    o.jobs = config->jobs;
  }
  if (const char* env = std::getenv("SSTGROUPS_CAP")) {
    try {
      o.cap = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("SSTGROUPS_CAP is not a number: ") + env);
    }
  }
  if (s.cap) o.cap = *s.cap;
  if (s.jobs) o.jobs = *s.jobs;
  if (s.seed) o.validation.sample_seed = *s.seed;
  return o;
}

std::filesystem::path locate(const std::string& arg) {
  namespace fs = std::filesystem;
  for (const fs::path& p : {fs::path(arg), catalog_dir() / arg, catalog_dir() / "groups" / arg,
                            catalog_dir() / "groups" / (arg + ".json")})
    if (fs::is_regular_file(p)) return p;
  return {};
}

bool is_manifest(const std::filesystem::path& file) {
  const Json j = Json::parse(read_text(file), nullptr, false);
  return j.is_object() && j.contains("entries");
}

// A group from a fixture file or, failing that, a standard catalog entry name.
ManifestEntry load_target(const std::string& arg) {
  if (const auto file = locate(arg); !file.empty()) {
    Fixture f = load_fixture(file);
    return {f.name, std::move(f.spec), std::move(f.subjects), std::move(f.expected)};
  }
  for (auto& e : standard_catalog().entries)
    if (e.name == arg) return e;
  throw ParseError("no spec file or catalog entry named \"" + arg + "\"");
}

Group build(const ManifestEntry& entry, const RunOptions& o) {
  BuildOptions b;
  b.order_cap = o.cap;
  b.validation = o.validation;
  return Group(build_from_spec(entry.spec, b), o.cap);
}

int emit(const Json& j, bool pass, const Settings& s, std::ostream& out) {
  if (s.json_path.empty()) {
    out << render(j);
  } else {
    std::ofstream file(s.json_path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + s.json_path);
    file << render(j);
    out << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

std::vector<ExpectationResult> expectations(const Group& g, const ManifestEntry& entry,
                                            const std::map<std::string, SubgroupId>& subjects, bool with_checks) {
  std::vector<ExpectationResult> out;
  for (const auto& [key, value] : entry.expected) {
    if (!with_checks && key.rfind("check.", 0) == 0) continue;
    out.push_back(evaluate_expectation(g, subjects, key, value, {}));
  }
  return out;
}

bool all_match(const std::vector<ExpectationResult>& e) {
  for (const auto& x : e)
    if (!x.matches()) return false;
  return true;
}

Json expectations_json(const std::vector<ExpectationResult>& e) {
  Json j = Json::array();
  for (const auto& x : e) j.push_back(to_json(x));
  return j;
}

Json series_json(const Group& g, const SeriesRecord& s) {
  Json j = Json::array();
  for (SubgroupId id : s.terms) j.push_back(to_json(describe(g, id)));
  return j;
}

int cmd_analyze(const std::string& target, const Settings& s, std::ostream& out) {
  const ManifestEntry entry = load_target(target);
  const Group g = build(entry, run_options(s, nullptr));
  const auto subjects = resolve_subjects(g, entry.subjects);
  Json j;
  j["tool_version"] = kToolVersion;
  j["group"] = to_json(summarize(g));
  Json series;
  series["derived"] = series_json(g, derived_series(g));
  series["lower_central"] = series_json(g, lower_central_series(g));
  series["upper_central"] = series_json(g, upper_central_series(g));
  series["chief"] = series_json(g, chief_series(g));
  j["series"] = std::move(series);
  Json ch;
  ch["center"] = to_json(describe(g, center(g)));
  ch["derived"] = to_json(describe(g, derived_subgroup(g)));
  ch["nilpotent_residual"] = to_json(describe(g, nilpotent_residual(g)));
  ch["fitting"] = to_json(describe(g, fitting(g)));
  ch["generalized_fitting"] = to_json(describe(g, generalized_fitting(g)));
  ch["frattini"] = to_json(describe(g, frattini(g)));
  ch["hypercenter"] = to_json(describe(g, hypercenter(g)));
  for (auto p : pi(g)) ch["O_" + std::to_string(p)] = to_json(describe(g, o_p(g, p)));
  if (solvable(g)) ch["system_normalizer"] = to_json(describe(g, system_normalizer(g)));
  j["characteristic_subgroups"] = std::move(ch);
  Json subj = Json::object();
  for (const auto& sub : entry.subjects) {
    Json row;
    row["subgroup"] = to_json(describe(g, subjects.at(sub.name)));
    for (Predicate p : kAllPredicates) row[predicate_name(p)] = holds(g, subjects.at(sub.name), p);
    subj[sub.name] = std::move(row);
  }
  j["subjects"] = std::move(subj);
  const auto e = expectations(g, entry, subjects, false);
  j["expectations"] = expectations_json(e);
  j["pass"] = all_match(e);
  return emit(j, all_match(e), s, out);
}

int cmd_predicate(const std::string& target, const std::string& subgroup, const std::string& pred_text,
                  const Settings& s, std::ostream& out) {
  const auto pred = parse_predicate(pred_text);
  if (!pred) throw ParseError("unknown predicate \"" + pred_text + "\"");
  const ManifestEntry entry = load_target(target);
  const Group g = build(entry, run_options(s, nullptr));
  const auto subjects = resolve_subjects(g, entry.subjects);
  const SubgroupId h = resolve_subgroup(g, subjects, subgroup);
  const PredicateVerdict v = evaluate(g, h, *pred);
  Json j;
  j["tool_version"] = kToolVersion;
  j["group"] = g.name();
  j["verdict"] = to_json(g, v);
  std::vector<ExpectationResult> e;
  const std::string key = std::string(predicate_name(*pred)) + "(" + subgroup + ")";
  for (const auto& [k, value] : entry.expected)
    if (k == key) e.push_back(evaluate_expectation(g, subjects, k, value, {}));
  j["expectations"] = expectations_json(e);
  j["pass"] = all_match(e);
  return emit(j, all_match(e), s, out);
}

int cmd_classify(const std::string& target, const Settings& s, std::ostream& out) {
  const ManifestEntry entry = load_target(target);
  const Group g = build(entry, run_options(s, nullptr));
  const auto subjects = resolve_subjects(g, entry.subjects);
  Json j;
  j["tool_version"] = kToolVersion;
  j["group"] = to_json(summarize(g));
  const auto e = expectations(g, entry, subjects, false);
  j["expectations"] = expectations_json(e);
  j["pass"] = all_match(e);
  return emit(j, all_match(e), s, out);
}

std::vector<TheoremId> parse_checks(const std::vector<std::string>& texts) {
  std::vector<TheoremId> out;
  for (const auto& t : texts) {
    std::size_t start = 0;
    while (start <= t.size()) {
      const std::size_t comma = t.find(',', start);
      const std::string id = t.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (id == "all") {
        out.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
      } else if (!id.empty()) {
        const auto parsed = parse_theorem(id);
        if (!parsed) throw ParseError("unknown check \"" + id + "\"");
        out.push_back(*parsed);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

int run_manifest(CatalogManifest manifest, const Settings& s, std::ostream& out, std::ostream& err) {
  const CatalogReport report = run_catalog(manifest, run_options(s, &manifest.config));
  bool build_error = false;
  for (const auto& list : {&report.entries, &report.products})
    for (const auto& e : *list)
      if (e.error) {
        build_error = true;
        err << e.name << ": " << *e.error << "\n";
      }
  const int code = emit(catalog_json(report), report.pass(), s, out);
  return build_error ? kExitUsage : code;
}

int cmd_verify(const std::string& target, const std::vector<std::string>& check_texts, const Settings& s,
               std::ostream& out, std::ostream& err) {
  auto checks = parse_checks(check_texts);
  if (checks.empty()) checks.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  const auto file = locate(target);
  if (!file.empty() && is_manifest(file)) {
    CatalogManifest m = load_manifest(file);
    m.config.checks = checks;
    for (auto& e : m.entries)
      std::erase_if(e.expected, [](const auto& kv) { return kv.first.rfind("check.", 0) == 0; });
    return run_manifest(std::move(m), s, out, err);
  }
  const ManifestEntry entry = load_target(target);
  EntryReport r = run_entry(entry, checks, run_options(s, nullptr));
  if (r.error) {
    err << r.name << ": " << *r.error << "\n";
    emit(entry_json(r), false, s, out);
    return kExitUsage;
  }
  return emit(entry_json(r), r.pass(), s, out);
}

int cmd_catalog(const std::string& manifest_path, const Settings& s, std::ostream& out, std::ostream& err) {
  CatalogManifest m;
  if (manifest_path.empty()) {
    m = standard_catalog();
  } else {
    const auto file = locate(manifest_path);
    if (file.empty()) throw ParseError("no manifest at " + manifest_path);
    m = load_manifest(file);
  }
  return run_manifest(std::move(m), s, out, err);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup permutability predicates and class checks for small finite groups", "sstgroups"};
  app.fallthrough();
  app.require_subcommand(1);
  Settings s;
  std::size_t cap = 0, jobs = 0;
  std::uint64_t seed = 0;
  auto* cap_opt = app.add_option("--cap", cap, "largest group order to build")->check(CLI::PositiveNumber);
  auto* jobs_opt = app.add_option("--jobs", jobs, "worker threads for catalog runs")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed-sample", seed, "seed of the associativity sample above order 256");
  app.add_option("--json", s.json_path, "write the JSON report to this file");

  std::string target, subgroup, pred, manifest;
  std::vector<std::string> checks;
  auto* analyze = app.add_subcommand("analyze", "series, characteristic subgroups and class verdicts");
  analyze->add_option("spec", target, "spec file or catalog entry")->required();
  auto* predicate = app.add_subcommand("predicate", "decide one predicate for one subgroup");
  predicate->add_option("spec", target, "spec file or catalog entry")->required();
  predicate->add_option("--subgroup", subgroup, "subject name or comma-separated generator words")->required();
  predicate->add_option("--pred", pred, "predicate id")->required();
  auto* classify_cmd = app.add_subcommand("classify", "class verdicts by brute force and characterization");
  classify_cmd->add_option("spec", target, "spec file or catalog entry")->required();
  auto* verify = app.add_subcommand("verify", "run theorem checks on a group or a manifest");
  verify->add_option("spec", target, "spec file, catalog entry or manifest")->required();
  verify->add_option("--check", checks, "check ids, comma separated, or all");
  auto* catalog = app.add_subcommand("catalog", "run a catalog manifest (default: the standard catalog)");
  catalog->add_option("manifest", manifest, "manifest file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (*cap_opt) s.cap = cap;
  if (*jobs_opt) s.jobs = jobs;
  if (*seed_opt) s.seed = seed;

  try {
    if (*analyze) return cmd_analyze(target, s, out);
    if (*predicate) return cmd_predicate(target, subgroup, pred, s, out);
    if (*classify_cmd) return cmd_classify(target, s, out);
    if (*verify) return cmd_verify(target, checks, s, out, err);
    if (*catalog) return cmd_catalog(manifest, s, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sst
