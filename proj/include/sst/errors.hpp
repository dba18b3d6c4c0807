#pragma once

#include <stdexcept>
#include <string>

namespace sst {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SST_DEFINE_ERROR(Name)            \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

// group construction
SST_DEFINE_ERROR(InvalidAction)
SST_DEFINE_ERROR(RelationViolated)
SST_DEFINE_ERROR(OrderCapExceeded)
SST_DEFINE_ERROR(InvalidTable)
SST_DEFINE_ERROR(UnknownLabel)

// subgroup and series queries
SST_DEFINE_ERROR(NotNormal)
SST_DEFINE_ERROR(NotPrime)
SST_DEFINE_ERROR(NotSubgroup)
SST_DEFINE_ERROR(NotSolvable)
SST_DEFINE_ERROR(NotPGroup)
SST_DEFINE_ERROR(UnknownRelation)

// input files
SST_DEFINE_ERROR(ParseError)
SST_DEFINE_ERROR(UnknownKind)
SST_DEFINE_ERROR(BadAction)

/// An internal consistency assertion failed; indicates a bug, not bad input.
SST_DEFINE_ERROR(InternalError)

#undef SST_DEFINE_ERROR

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace sst
