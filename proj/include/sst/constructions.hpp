#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sst/bitset.hpp"
#include "sst/group_table.hpp"

namespace sst {

inline constexpr std::size_t kDefaultOrderCap = 360;

GroupTable cyclic_group(std::size_t n);

/// Dihedral group of order 2n, generated by a rotation "r" and a reflection "s".
GroupTable dihedral_group(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// Permutation group on {0..degree-1} generated by the given image arrays.
/// Elements are numbered by the lexicographic order of their image arrays and
/// composition applies the left factor first. Labels default to p1, p2, ...
GroupTable permutation_group(std::size_t degree, const std::vector<std::vector<std::size_t>>& gens,
                             std::vector<std::string> labels = {},
                             std::size_t cap = kDefaultOrderCap);

/// S_n generated by s = (1 2) and c = (1 2 ... n).
GroupTable symmetric_group(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// A_n generated by the 3-cycles t3 = (1 2 3), ..., tn = (1 2 n).
GroupTable alternating_group(std::size_t n, std::size_t cap = kDefaultOrderCap);

/// Element (a, b) has id a*|b| + b; labels collide only if shared, in which case
/// every label is prefixed by its factor position ("f1.", "f2.").
GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          std::size_t cap = kDefaultOrderCap);

/// Automorphism images of the kernel generators under one actor generator.
struct GeneratorAction {
  std::string actor_label;
  /// (kernel label, image element in the kernel); unlisted generators are fixed.
  std::vector<std::pair<std::string, Element>> images;
};

/// Semidirect product kernel ⋊ actor where the actor acts on the right:
/// for actor generator a and kernel generator k, a^-1 k a equals the given
/// image. Element a·k has id a*|kernel| + k. Throws InvalidAction when the
/// images do not extend to automorphisms or do not define a homomorphism.
GroupTable semidirect_product(const GroupTable& kernel, const GroupTable& actor,
                              const std::vector<GeneratorAction>& action,
                              std::size_t cap = kDefaultOrderCap);

struct QuotientResult {
  GroupTable table;
  /// Element of the parent -> coset id; cosets are numbered by least member.
  std::vector<Element> projection;
};

/// G/N. Throws NotNormal if n is not a normal subgroup.
QuotientResult quotient(const GroupTable& g, const Bitset& n);

struct InducedResult {
  GroupTable table;
  /// Local id -> parent element (ascending, so local 0 is the identity).
  std::vector<Element> embedding;
};

/// The subgroup h re-indexed as a standalone table.
InducedResult induced_table(const GroupTable& g, const Bitset& h);

}  // namespace sst
