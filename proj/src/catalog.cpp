#include "sst/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sst/errors.hpp"

namespace sst {

namespace {

Json parse_json(std::string_view text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& node, const char* key, const std::string& path) {
  if (!node.contains(key)) fail(path, std::string("missing field \"") + key + "\"");
  return node.at(key);
}

std::size_t positive(const Json& node, const char* key, const std::string& path) {
  const Json& v = field(node, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 1) fail(path + "." + key, "expected a positive integer");
  return v.get<std::size_t>();
}

std::string text_of(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

ElementWord word_of(const Json& v, const std::string& path) {
  try {
    return parse_word(text_of(v, path));
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

std::optional<GroupSpec::Kind> kind_from(std::string_view s) {
  using K = GroupSpec::Kind;
  for (K k : {K::cyclic, K::dihedral, K::symmetric, K::alternating, K::direct, K::semidirect, K::permutation})
    if (s == kind_name(k)) return k;
  return std::nullopt;
}

void check_action(const GroupSpec& spec, const std::string& path) {
  const auto kernel_labels = generator_labels(spec.children[0]);
  const auto actor_labels = generator_labels(spec.children[1]);
  auto known = [](const std::vector<std::string>& labels, const std::string& l) {
    for (const auto& x : labels)
      if (x == l) return true;
    return false;
  };
  for (const auto& a : spec.action) {
    if (!known(actor_labels, a.actor_label))
      throw BadAction(path + ".action: \"" + a.actor_label + "\" is not an actor generator");
    for (const auto& img : a.images) {
      if (!known(kernel_labels, img.kernel_label))
        throw BadAction(path + ".action." + a.actor_label + ": \"" + img.kernel_label + "\" is not a kernel generator");
      for (const auto& letter : img.image)
        if (!known(kernel_labels, letter.label))
          throw BadAction(path + ".action." + a.actor_label + "." + img.kernel_label + ": \"" + letter.label +
                          "\" is not a kernel generator");
    }
  }
}

std::vector<Subject> subjects_of(const Json& node, const std::string& path) {
  std::vector<Subject> out;
  if (!node.is_object()) fail(path, "expected an object of subject words");
  for (const auto& [name, words] : node.items()) {
    Subject s{name, {}};
    const std::string p = path + "." + name;
    if (words.is_string()) {
      s.words.push_back(word_of(words, p));
    } else if (words.is_array()) {
      for (std::size_t i = 0; i < words.size(); ++i) s.words.push_back(word_of(words[i], p + "[" + std::to_string(i) + "]"));
    } else {
      fail(p, "expected a word or a list of words");
    }
    out.push_back(std::move(s));
  }
  return out;
}

Expectations expected_of(const Json& node, const std::string& path) {
  Expectations out;
  if (!node.is_object()) fail(path, "expected an object of booleans");
  for (const auto& [key, value] : node.items()) {
    if (!value.is_boolean()) fail(path + "." + key, "expected a boolean");
    out.emplace_back(key, value.get<bool>());
  }
  return out;
}

// Later values win; order follows first appearance.
template <class T, class Key>
void overlay(std::vector<T>& base, const std::vector<T>& extra, Key key) {
  for (const auto& e : extra) {
    bool replaced = false;
    for (auto& b : base)
      if (key(b) == key(e)) {
        b = e;
        replaced = true;
      }
    if (!replaced) base.push_back(e);
  }
}

}  // namespace

GroupSpec parse_group_spec(const Json& node, const std::string& path) {
  if (!node.is_object()) fail(path, "expected a group spec object");
  const std::string kind_text = text_of(field(node, "kind", path), path + ".kind");
  const auto kind = kind_from(kind_text);
  if (!kind) throw UnknownKind(path + ".kind: unknown group kind \"" + kind_text + "\"");

  GroupSpec spec;
  spec.kind = *kind;
  switch (*kind) {
    case GroupSpec::Kind::cyclic:
    case GroupSpec::Kind::dihedral:
    case GroupSpec::Kind::symmetric:
    case GroupSpec::Kind::alternating:
      spec.n = positive(node, "n", path);
      break;
    case GroupSpec::Kind::direct: {
      const Json& factors = field(node, "factors", path);
      if (!factors.is_array() || factors.empty()) fail(path + ".factors", "expected a non-empty list");
      for (std::size_t i = 0; i < factors.size(); ++i)
        spec.children.push_back(parse_group_spec(factors[i], path + ".factors[" + std::to_string(i) + "]"));
      break;
    }
    case GroupSpec::Kind::semidirect: {
      spec.children.push_back(parse_group_spec(field(node, "kernel", path), path + ".kernel"));
      spec.children.push_back(parse_group_spec(field(node, "actor", path), path + ".actor"));
      const Json& action = field(node, "action", path);
      if (!action.is_object()) fail(path + ".action", "expected an object keyed by actor generators");
      for (const auto& [actor, images] : action.items()) {
        if (!images.is_object()) fail(path + ".action." + actor, "expected an object keyed by kernel generators");
        GroupSpec::ActorAction a{actor, {}};
        for (const auto& [kernel, word] : images.items())
          a.images.push_back({kernel, word_of(word, path + ".action." + actor + "." + kernel)});
        spec.action.push_back(std::move(a));
      }
      check_action(spec, path);
      break;
    }
    case GroupSpec::Kind::permutation: {
      spec.degree = positive(node, "degree", path);
      const Json& gens = field(node, "generators", path);
      if (!gens.is_array()) fail(path + ".generators", "expected a list of image arrays");
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string p = path + ".generators[" + std::to_string(i) + "]";
        if (!gens[i].is_array() || gens[i].size() != spec.degree) fail(p, "expected an image array of length degree");
        std::vector<std::size_t> images;
        std::set<std::size_t> seen;
        for (const auto& x : gens[i]) {
          if (!x.is_number_unsigned() || x.get<std::size_t>() >= spec.degree || !seen.insert(x.get<std::size_t>()).second)
            fail(p, "not a permutation of 0..degree-1");
          images.push_back(x.get<std::size_t>());
        }
        spec.permutations.push_back(std::move(images));
      }
      break;
    }
  }
  if (node.contains("labels")) {
    const Json& labels = node.at("labels");
    if (!labels.is_array()) fail(path + ".labels", "expected a list of strings");
    for (std::size_t i = 0; i < labels.size(); ++i)
      spec.labels.push_back(text_of(labels[i], path + ".labels[" + std::to_string(i) + "]"));
  }
  if (node.contains("name")) spec.name = text_of(node.at("name"), path + ".name");
  if (node.contains("relations")) {
    const Json& rel = node.at("relations");
    if (!rel.is_array()) fail(path + ".relations", "expected a list of words");
    for (std::size_t i = 0; i < rel.size(); ++i)
      spec.relations.push_back(word_of(rel[i], path + ".relations[" + std::to_string(i) + "]"));
  }
  return spec;
}

GroupSpec parse_group_spec_text(std::string_view text) { return parse_group_spec(parse_json(text, "spec")); }

Json to_json(const GroupSpec& spec) {
  Json out;
  out["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
    case GroupSpec::Kind::dihedral:
    case GroupSpec::Kind::symmetric:
    case GroupSpec::Kind::alternating:
      out["n"] = spec.n;
      break;
    case GroupSpec::Kind::direct:
      out["factors"] = Json::array();
      for (const auto& c : spec.children) out["factors"].push_back(to_json(c));
      break;
    case GroupSpec::Kind::semidirect: {
      out["kernel"] = to_json(spec.children.at(0));
      out["actor"] = to_json(spec.children.at(1));
      Json action = Json::object();
      for (const auto& a : spec.action) {
        Json images = Json::object();
        for (const auto& img : a.images) images[img.kernel_label] = to_string(img.image);
        action[a.actor_label] = std::move(images);
      }
      out["action"] = std::move(action);
      break;
    }
    case GroupSpec::Kind::permutation:
      out["degree"] = spec.degree;
      out["generators"] = spec.permutations;
      break;
  }
  if (!spec.labels.empty()) out["labels"] = spec.labels;
  if (!spec.name.empty()) out["name"] = spec.name;
  if (!spec.relations.empty()) {
    out["relations"] = Json::array();
    for (const auto& r : spec.relations) out["relations"].push_back(to_string(r));
  }
  return out;
}

std::string serialize(const GroupSpec& spec) { return to_json(spec).dump(); }

namespace {

Fixture fixture_from(const Json& node, const std::string& origin) {
  Fixture f;
  if (node.is_object() && node.contains("kind")) {
    f.spec = parse_group_spec(node, origin);
    f.name = f.spec.name;
    return f;
  }
  if (!node.is_object()) fail(origin, "expected a fixture object");
  f.spec = parse_group_spec(field(node, "group", origin), origin + ".group");
  if (node.contains("name")) f.name = text_of(node.at("name"), origin + ".name");
  if (f.name.empty()) f.name = f.spec.name;
  if (f.spec.name.empty()) f.spec.name = f.name;
  if (node.contains("subjects")) f.subjects = subjects_of(node.at("subjects"), origin + ".subjects");
  if (node.contains("expected")) f.expected = expected_of(node.at("expected"), origin + ".expected");
  return f;
}

}  // namespace

Fixture parse_fixture(std::string_view text, const std::string& origin) {
  return fixture_from(parse_json(text, origin), origin);
}

std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot open " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fixture load_fixture(const std::filesystem::path& file) {
  Fixture f = parse_fixture(read_text(file), file.filename().string());
  if (f.name.empty()) f.name = file.stem().string();
  if (f.spec.name.empty()) f.spec.name = f.name;
  return f;
}

CatalogManifest parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
  const Json root = parse_json(text, "manifest");
  if (!root.is_object()) fail("manifest", "expected an object");
  CatalogManifest m;
  if (root.contains("config")) {
    const Json& c = root.at("config");
    if (c.contains("cap")) m.config.cap = positive(c, "cap", "config");
    if (c.contains("jobs")) m.config.jobs = positive(c, "jobs", "config");
    if (c.contains("checks")) {
      const Json& checks = c.at("checks");
      if (checks.is_string() && checks.get<std::string>() == "all") {
        for (TheoremId id : kAllTheorems) m.config.checks.push_back(id);
      } else if (checks.is_array()) {
        for (std::size_t i = 0; i < checks.size(); ++i) {
          const std::string id = text_of(checks[i], "config.checks[" + std::to_string(i) + "]");
          const auto parsed = parse_theorem(id);
          if (!parsed) fail("config.checks", "unknown check \"" + id + "\"");
          m.config.checks.push_back(*parsed);
        }
      } else {
        fail("config.checks", "expected \"all\" or a list of check ids");
      }
    }
  }
  if (m.config.checks.empty())
    for (TheoremId id : kAllTheorems) m.config.checks.push_back(id);

  auto check_expectations = [&](const Expectations& e, const std::string& path) {
    for (const auto& [key, value] : e) {
      if (key.rfind("check.", 0) != 0) continue;
      const auto id = parse_theorem(key.substr(6));
      bool selected = false;
      for (TheoremId c : m.config.checks) selected = selected || (id && c == *id);
      if (!selected) fail(path + "." + key, "expectation names a check outside the selection");
    }
  };

  std::set<std::string> names;
  const Json empty = Json::array();
  const Json& entries = root.contains("entries") ? root.at("entries") : empty;
  if (!entries.is_array()) fail("entries", "expected a list");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "entries[" + std::to_string(i) + "]";
    const Json& e = entries[i];
    ManifestEntry entry;
    entry.name = text_of(field(e, "name", path), path + ".name");
    if (!names.insert(entry.name).second) fail(path + ".name", "duplicate entry name \"" + entry.name + "\"");
    const Json& spec = field(e, "spec", path);
    if (spec.is_string()) {
      Fixture f = load_fixture(base_dir / spec.get<std::string>());
      entry.spec = std::move(f.spec);
      entry.subjects = std::move(f.subjects);
      entry.expected = std::move(f.expected);
    } else {
      entry.spec = parse_group_spec(spec, path + ".spec");
    }
    if (entry.spec.name.empty()) entry.spec.name = entry.name;
    if (e.contains("subjects"))
      overlay(entry.subjects, subjects_of(e.at("subjects"), path + ".subjects"),
              [](const Subject& s) { return s.name; });
    if (e.contains("expected"))
      overlay(entry.expected, expected_of(e.at("expected"), path + ".expected"),
              [](const std::pair<std::string, bool>& p) { return p.first; });
    check_expectations(entry.expected, path + ".expected");
    m.entries.push_back(std::move(entry));
  }

  const Json& products = root.contains("products") ? root.at("products") : empty;
  if (!products.is_array()) fail("products", "expected a list");
  for (std::size_t i = 0; i < products.size(); ++i) {
    const std::string path = "products[" + std::to_string(i) + "]";
    const Json& p = products[i];
    ProductEntry entry;
    entry.name = text_of(field(p, "name", path), path + ".name");
    if (!names.insert(entry.name).second) fail(path + ".name", "duplicate entry name \"" + entry.name + "\"");
    const Json& factors = field(p, "factors", path);
    if (!factors.is_array() || factors.size() < 2) fail(path + ".factors", "expected at least two entry names");
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const std::string f = text_of(factors[j], path + ".factors[" + std::to_string(j) + "]");
      bool known = false;
      for (const auto& e : m.entries) known = known || e.name == f;
      if (!known) fail(path + ".factors", "unknown entry \"" + f + "\"");
      entry.factors.push_back(f);
    }
    if (p.contains("expected")) entry.expected = expected_of(p.at("expected"), path + ".expected");
    check_expectations(entry.expected, path + ".expected");
    m.products.push_back(std::move(entry));
  }
  return m;
}

CatalogManifest load_manifest(const std::filesystem::path& file) {
  return parse_manifest(read_text(file), file.parent_path());
}

std::filesystem::path catalog_dir() { return SST_CATALOG_DIR; }

CatalogManifest standard_catalog() { return load_manifest(catalog_dir() / "standard.json"); }

}  // namespace sst
