#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sst/catalog.hpp"
#include "sst/classes.hpp"
#include "sst/group.hpp"
#include "sst/theorems.hpp"

namespace sst {

struct ExpectationResult {
  std::string key;
  bool expected = false;
  /// Empty when the key could not be evaluated; `error` says why.
  std::optional<bool> actual;
  std::string error;

  bool matches() const { return actual.has_value() && *actual == expected; }
};

struct ClassRecord {
  GroupClass cls;
  Via via;
  Tri verdict = Tri::False;
  std::vector<std::pair<std::string, SubgroupRef>> counterexample;
  std::string reason;
};

struct GroupSummary {
  std::string name;
  std::size_t order = 0;
  std::vector<std::uint64_t> pi;
  std::size_t subgroup_count = 0;
  std::vector<ClassRecord> classes;
};

struct EntryReport {
  std::string name;
  /// Set when the group could not be built or a check raised an error.
  std::optional<std::string> error;
  std::optional<GroupSummary> group;
  std::vector<std::string> factors;
  std::vector<TheoremReport> checks;
  std::vector<ExpectationResult> expectations;

  bool pass() const;
};

struct CatalogReport {
  std::vector<EntryReport> entries;
  std::vector<EntryReport> products;

  bool pass() const;
};

struct RunOptions {
  std::size_t jobs = 1;
  std::size_t cap = kDefaultOrderCap;
  ValidationOptions validation;
};

/// Subject name -> subgroup generated by its words. "G" and "1" are always
/// defined. Throws UnknownLabel.
std::map<std::string, SubgroupId> resolve_subjects(const Group& g, const std::vector<Subject>& subjects);

/// Subgroup named by a subject or by comma-separated generator words.
SubgroupId resolve_subgroup(const Group& g, const std::map<std::string, SubgroupId>& subjects,
                            const std::string& text);

/// Brute-force verdicts for every class plus the PST, BT and SST
/// characterizations.
GroupSummary summarize(const Group& g);
ClassRecord record_of(const Group& g, const ClassVerdict& v);

/// Evaluates one expectation key against a group. Keys:
///   CLASS, CLASS(S), CLASS.characterization, CLASS.counterexample==S,
///   pred(S), pred.witness_sylow_p(S), sylow_p(S), op==S, order==n,
///   subgroups==n, check.ID
/// where op is one of nilpotent_residual, fitting, generalized_fitting,
/// frattini, hypercenter, center, derived, system_normalizer, O_p.
ExpectationResult evaluate_expectation(const Group& g, const std::map<std::string, SubgroupId>& subjects,
                                       const std::string& key, bool expected,
                                       const std::vector<TheoremReport>& checks);

/// Builds one group and runs the selected single-group checks on it.
EntryReport run_entry(const ManifestEntry& entry, const std::vector<TheoremId>& checks, const RunOptions& options);
/// Builds the factors and their product and runs the factor-list checks.
EntryReport run_product(const ProductEntry& product, const CatalogManifest& manifest, const RunOptions& options);

/// Runs every entry on a pool of `options.jobs` workers; results keep
/// manifest order.
CatalogReport run_catalog(const CatalogManifest& manifest, const RunOptions& options);

}  // namespace sst
