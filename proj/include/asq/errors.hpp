#pragma once

#include <stdexcept>

namespace asq {

/// Raised when a precondition on an argument is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails. Seeing one means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace asq
