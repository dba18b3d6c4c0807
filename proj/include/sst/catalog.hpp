#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sst/group_spec.hpp"
#include "sst/theorems.hpp"

namespace sst {

using Json = nlohmann::ordered_json;

/// A named subgroup given by generator words over the spec's labels.
struct Subject {
  std::string name;
  std::vector<ElementWord> words;
  bool operator==(const Subject&) const = default;
};

/// Expected boolean outcomes keyed by expectation strings; insertion order
/// is preserved.
using Expectations = std::vector<std::pair<std::string, bool>>;

/// A group spec file: the group plus optional subjects and expectations.
struct Fixture {
  std::string name;
  GroupSpec spec;
  std::vector<Subject> subjects;
  Expectations expected;
};

/// Parses a group spec node. Throws ParseError (with the field path),
/// UnknownKind, BadAction.
GroupSpec parse_group_spec(const Json& node, const std::string& path = "$");
GroupSpec parse_group_spec_text(std::string_view text);
Json to_json(const GroupSpec& spec);
/// Compact JSON text; parse_group_spec_text(serialize(s)) == s.
std::string serialize(const GroupSpec& spec);

/// Accepts {"name", "group", "subjects", "expected"} or a bare spec node.
Fixture parse_fixture(std::string_view text, const std::string& origin = "fixture");
Fixture load_fixture(const std::filesystem::path& file);

struct ManifestEntry {
  std::string name;
  GroupSpec spec;
  std::vector<Subject> subjects;
  Expectations expected;
};

/// Direct product of named entries, checked with the factor-list theorems.
struct ProductEntry {
  std::string name;
  std::vector<std::string> factors;
  Expectations expected;
};

struct CatalogConfig {
  std::size_t cap = kDefaultOrderCap;
  std::size_t jobs = 1;
  std::vector<TheoremId> checks;
};

struct CatalogManifest {
  CatalogConfig config;
  std::vector<ManifestEntry> entries;
  std::vector<ProductEntry> products;
};

/// Relative spec paths resolve against base_dir. Names must be unique and
/// "check.X" expectations must name selected checks. Throws ParseError.
CatalogManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir);
CatalogManifest load_manifest(const std::filesystem::path& file);

/// Directory holding the shipped catalog.
std::filesystem::path catalog_dir();
CatalogManifest standard_catalog();

/// Reads a whole file. Throws ParseError when it cannot be opened.
std::string read_text(const std::filesystem::path& file);

}  // namespace sst
