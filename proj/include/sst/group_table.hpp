#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sst/word.hpp"

namespace sst {

/// Dense element id; the identity is always 0.
using Element = std::uint32_t;

struct Generator {
  std::string label;
  Element element = 0;
  bool operator==(const Generator&) const = default;
};

/// A finite group given by its full multiplication table.
///
/// Immutable once constructed. The constructor derives inverses and checks
/// the identity law; full axiom checking is done by validate().
class GroupTable {
 public:
  GroupTable() : GroupTable("1", 1, {0}, {}) {}
  GroupTable(std::string name, std::size_t order, std::vector<Element> mult,
             std::vector<Generator> generators);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Element mul(Element a, Element b) const { return mult_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  /// x^-1 a x
  Element conj(Element a, Element x) const { return mul(mul(inv_[x], a), x); }
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  Element pow(Element a, long long k) const;

  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<Element> generator(std::string_view label) const;
  void set_generators(std::vector<Generator> generators) { generators_ = std::move(generators); }

  const std::vector<Element>& raw_table() const { return mult_; }

  bool same_table(const GroupTable& other) const {
    return order_ == other.order_ && mult_ == other.mult_;
  }
  bool operator==(const GroupTable& other) const {
    return same_table(other) && generators_ == other.generators_ && name_ == other.name_;
  }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<Generator> generators_;
};

struct ValidationOptions {
  /// Orders up to this bound get the exhaustive associativity check.
  std::size_t exhaustive_limit = 256;
  /// Seed of the pseudorandom triple sample used above the limit.
  std::uint64_t sample_seed = 0x5eed;
};

/// Checks Latin square, identity, inverse and associativity laws.
/// Throws InvalidTable describing the first violation.
void validate(const GroupTable& g, const ValidationOptions& options = {});

/// Least k >= 1 with e^k = 1.
std::size_t element_order(const GroupTable& g, Element e);

/// Throws UnknownLabel if a letter does not name a generator.
Element evaluate(const GroupTable& g, const ElementWord& word);

/// A shortest word for every element over the generators and their
/// inverses; ties go to the first generator in label order of discovery.
std::vector<ElementWord> shortest_words(const GroupTable& g);

/// True iff every word evaluates to the identity.
bool verify_relations(const GroupTable& g, const std::vector<ElementWord>& words);

}  // namespace sst
