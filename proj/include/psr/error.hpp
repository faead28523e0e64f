#pragma once

#include <stdexcept>
#include <string>

namespace psr {

/// Malformed textual input (rationals, JSON documents, vote literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a documented precondition of the operation it was passed to.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for this kind of input (e.g. classifying a
/// tabulated generator).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured enumeration bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction failed its own post-verification. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace psr
