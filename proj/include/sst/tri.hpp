#pragma once

namespace sst {

/// Outcome of a statement whose hypotheses may not hold.
enum class Tri { False, True, NotApplicable };

inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::NotApplicable: return "not_applicable";
  }
  return "?";
}

}  // namespace sst
