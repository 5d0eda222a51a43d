#pragma once

#include <stdexcept>
#include <string>

namespace qnewton {

enum class ErrorCode {
  Cycle,           // relation closure produced a cycle
  Range,           // index/label/argument outside the allowed range
  Size,            // instance too large for an exhaustive guard
  Budget,          // enumeration exceeded a caller-supplied cap
  Domain,          // argument outside the mathematical domain of the operation
  InexactDivision, // polynomial division left a remainder
  ZeroPolynomial,  // operation undefined on the zero polynomial
  DivisionByZero,
  DuplicateNode,   // interpolation nodes collide
  EmptyDescents,   // descent-removal asked on a descent-free word
  EmptySet,        // minimum over an empty candidate set
  NotNatural,      // poset labeling is not natural (x < y in P must imply x < y in Z)
  BadShape,        // invalid polygon shape parameters
  Parse,           // malformed input text
  Io,              // file could not be read or written
  Internal,        // invariant breach: a bug, not a user error
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qnewton
