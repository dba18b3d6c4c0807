#pragma once

#include <string>

#include "sst/catalog.hpp"
#include "sst/harness.hpp"
#include "sst/permutability.hpp"

namespace sst {

inline constexpr const char* kToolVersion = "1.0.0";

Json to_json(const SubgroupRef& ref);
Json to_json(const TheoremReport& report);
Json to_json(const ClassRecord& record);
Json to_json(const GroupSummary& summary);
Json to_json(const ExpectationResult& result);
Json to_json(const Group& g, const PredicateVerdict& verdict);

/// {tool_version, group, checks, counterexamples, expectations, pass}
Json entry_json(const EntryReport& entry);
/// {tool_version, entries, products, summary}
Json catalog_json(const CatalogReport& report);

/// Two-space indented dump terminated by a newline.
std::string render(const Json& j);

}  // namespace sst
