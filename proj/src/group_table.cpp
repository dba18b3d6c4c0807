#include "sst/group_table.hpp"

#include <deque>
#include <random>

#include "sst/errors.hpp"

namespace sst {

GroupTable::GroupTable(std::string name, std::size_t order, std::vector<Element> mult,
                       std::vector<Generator> generators)
    : name_(std::move(name)),
      order_(order),
      mult_(std::move(mult)),
      inv_(order, 0),
      generators_(std::move(generators)) {
  if (order_ == 0) throw InvalidTable("group order must be positive");
  if (mult_.size() != order_ * order_) throw InvalidTable("table size does not match order");
  for (Element v : mult_)
    if (v >= order_) throw InvalidTable("table entry out of range");
  for (Element g = 0; g < order_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g)
      throw InvalidTable("element 0 is not the identity (fails at " + std::to_string(g) + ")");
  }
  for (Element g = 0; g < order_; ++g) {
    bool found = false;
    for (Element h = 0; h < order_; ++h) {
      if (mul(g, h) == 0) {
        inv_[g] = h;
        found = true;
        break;
      }
    }
    if (!found) throw InvalidTable("element " + std::to_string(g) + " has no inverse");
  }
  for (const auto& gen : generators_)
    if (gen.element >= order_) throw InvalidTable("generator '" + gen.label + "' out of range");
}

Element GroupTable::pow(Element a, long long k) const {
  Element base = k < 0 ? inv_[a] : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  e %= element_order(*this, a);
  Element result = 0;
  while (e) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<Element> GroupTable::generator(std::string_view label) const {
  for (const auto& g : generators_)
    if (g.label == label) return g.element;
  return std::nullopt;
}

void validate(const GroupTable& g, const ValidationOptions& options) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      if (seen[g.mul(a, b)]++) throw InvalidTable("row " + std::to_string(a) + " repeats an entry");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < n; ++b) {
      if (seen[g.mul(b, a)]++)
        throw InvalidTable("column " + std::to_string(a) + " repeats an entry");
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (g.mul(a, g.inv(a)) != 0 || g.mul(g.inv(a), a) != 0)
      throw InvalidTable("inverse law fails at " + std::to_string(a));
  }
  auto check = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw InvalidTable("associativity fails at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + ")");
  };
  if (n <= options.exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  for (const auto& x : g.generators())
    for (const auto& y : g.generators())
      for (const auto& z : g.generators()) check(x.element, y.element, z.element);
  std::mt19937_64 rng(options.sample_seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < 10 * n; ++i) check(pick(rng), pick(rng), pick(rng));
}

std::size_t element_order(const GroupTable& g, Element e) {
  std::size_t k = 1;
  for (Element x = e; x != 0; x = g.mul(x, e)) {
    if (++k > g.order()) throw InvalidTable("powers of an element never reach the identity");
  }
  ensure(g.order() % k == 0, "element order does not divide the group order");
  return k;
}

std::vector<ElementWord> shortest_words(const GroupTable& g) {
  std::vector<ElementWord> words(g.order());
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      for (long long e : {1LL, -1LL}) {
        const Element v = g.mul(u, e == 1 ? gen.element : g.inv(gen.element));
        if (seen[v]) continue;
        seen[v] = true;
        ElementWord w = words[u];
        if (!w.empty() && w.back().label == gen.label) w.back().exponent += e;
        else w.push_back({gen.label, e});
        words[v] = std::move(w);
        queue.push_back(v);
      }
    }
  }
  return words;
}

Element evaluate(const GroupTable& g, const ElementWord& word) {
  Element out = 0;
  for (const auto& letter : word) {
    const auto gen = g.generator(letter.label);
    if (!gen) throw UnknownLabel("unknown generator label '" + letter.label + "' in " + g.name());
    out = g.mul(out, g.pow(*gen, letter.exponent));
  }
  return out;
}

bool verify_relations(const GroupTable& g, const std::vector<ElementWord>& words) {
  for (const auto& w : words)
    if (evaluate(g, w) != 0) return false;
  return true;
}

}  // namespace sst
