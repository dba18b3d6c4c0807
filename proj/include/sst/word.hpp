#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sst {

struct WordLetter {
  std::string label;
  long long exponent = 1;
  bool operator==(const WordLetter&) const = default;
};

/// A product of generator powers, read left to right.
using ElementWord = std::vector<WordLetter>;

/// Parses a word such as "x y^-1", "z^-1*x*z", "[x,y]", "x^z", "(x y)^2" or
/// "x^z = x^-1" (an equation a = b is read as a b^-1). "1" and "" denote the
/// identity. The result is flattened and adjacent equal labels are merged.
/// Throws ParseError.
ElementWord parse_word(std::string_view text);

/// Canonical text form, e.g. "x^-1 y z^2"; "1" for the empty word.
std::string to_string(const ElementWord& word);

ElementWord inverse(const ElementWord& word);

}  // namespace sst
