#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "sst/catalog.hpp"
#include "sst/group.hpp"
#include "sst/group_spec.hpp"
#include "sst/harness.hpp"
#include "sst/word.hpp"

namespace sst::test {

inline Group make(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap) {
  BuildOptions b;
  b.order_cap = cap;
  return Group(build_from_spec(spec, b), cap);
}

inline Group fixture(const std::string& name) {
  return make(load_fixture(catalog_dir() / "groups" / (name + ".json")).spec);
}

inline Group entry(const std::string& name) {
  for (const auto& e : standard_catalog().entries)
    if (e.name == name) return make(e.spec);
  throw std::invalid_argument("no catalog entry " + name);
}

inline SubgroupId sub(const Group& g, std::initializer_list<const char*> words) {
  std::vector<Element> seed;
  for (const char* w : words) seed.push_back(evaluate(g.table(), parse_word(w)));
  return g.generated(seed);
}

inline Element elt(const Group& g, const char* word) { return evaluate(g.table(), parse_word(word)); }

/// Naive oracle: closure of a seed by repeated multiplication.
inline std::vector<bool> naive_closure(const GroupTable& t, std::vector<bool> s) {
  const std::size_t n = t.order();
  s[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!s[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!s[b]) continue;
        const Element c = t.mul(static_cast<Element>(a), static_cast<Element>(b));
        if (!s[c]) s[c] = grew = true;
      }
    }
  }
  return s;
}

/// Naive oracle: every subgroup as a membership vector, found by closing
/// each known subgroup under one more element until nothing new appears.
inline std::set<std::vector<bool>> naive_subgroups(const GroupTable& t) {
  const std::size_t n = t.order();
  std::set<std::vector<bool>> found{naive_closure(t, std::vector<bool>(n, false))};
  std::vector<std::vector<bool>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<bool>> next;
    for (const auto& h : frontier) {
      for (std::size_t x = 0; x < n; ++x) {
        if (h[x]) continue;
        auto seed = h;
        seed[x] = true;
        auto k = naive_closure(t, seed);
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  return found;
}

inline std::vector<bool> members_of(const Group& g, SubgroupId h) {
  std::vector<bool> out(g.order(), false);
  g.members(h).for_each([&](std::uint32_t x) { out[x] = true; });
  return out;
}

/// Naive oracle: HK = KH as sets.
inline bool naive_permutes(const Group& g, SubgroupId h, SubgroupId k) {
  std::set<Element> hk, kh;
  const auto& t = g.table();
  for (auto a : g.members(h).to_vector())
    for (auto b : g.members(k).to_vector()) {
      hk.insert(t.mul(a, b));
      kh.insert(t.mul(b, a));
    }
  return hk == kh;
}

inline bool naive_normal(const Group& g, SubgroupId h) {
  const auto& t = g.table();
  for (Element x = 0; x < g.order(); ++x)
    for (auto a : g.members(h).to_vector())
      if (!g.members(h).test(t.conj(a, x))) return false;
  return true;
}

}  // namespace sst::test
