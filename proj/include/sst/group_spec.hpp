#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sst/constructions.hpp"
#include "sst/group_table.hpp"
#include "sst/word.hpp"

namespace sst {

/// Construction tree describing a concrete finite group.
struct GroupSpec {
  enum class Kind { cyclic, dihedral, symmetric, alternating, direct, semidirect, permutation };

  struct KernelImage {
    std::string kernel_label;
    ElementWord image;
    bool operator==(const KernelImage&) const = default;
  };
  struct ActorAction {
    std::string actor_label;
    std::vector<KernelImage> images;
    bool operator==(const ActorAction&) const = default;
  };

  Kind kind = Kind::cyclic;
  /// cyclic: order; dihedral: half the order; symmetric/alternating: degree.
  std::size_t n = 1;
  /// direct: the factors; semidirect: {kernel, actor}.
  std::vector<GroupSpec> children;
  std::vector<ActorAction> action;
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> permutations;
  /// Renames the generators in order; empty keeps the defaults.
  std::vector<std::string> labels;
  std::string name;
  /// Words that must evaluate to the identity in the built group.
  std::vector<ElementWord> relations;

  bool operator==(const GroupSpec&) const = default;

  static GroupSpec cyclic(std::size_t n);
  static GroupSpec dihedral(std::size_t n);
  static GroupSpec symmetric(std::size_t n);
  static GroupSpec alternating(std::size_t n);
  static GroupSpec direct(std::vector<GroupSpec> factors);
  static GroupSpec semidirect(GroupSpec kernel, GroupSpec actor, std::vector<ActorAction> action);
  static GroupSpec permutation(std::size_t degree, std::vector<std::vector<std::size_t>> gens);

  GroupSpec&& with_labels(std::vector<std::string> l) && {
    labels = std::move(l);
    return std::move(*this);
  }
  GroupSpec&& with_name(std::string s) && {
    name = std::move(s);
    return std::move(*this);
  }
};

const char* kind_name(GroupSpec::Kind kind);

struct BuildOptions {
  std::size_t order_cap = kDefaultOrderCap;
  ValidationOptions validation;
};

/// Generator labels the built group will carry, computed without building.
std::vector<std::string> generator_labels(const GroupSpec& spec);

/// Builds and fully validates the table. Deterministic.
/// Throws InvalidAction, RelationViolated, OrderCapExceeded, UnknownLabel.
GroupTable build_from_spec(const GroupSpec& spec, const BuildOptions& options = {});

}  // namespace sst
