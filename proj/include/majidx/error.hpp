#pragma once

#include <stdexcept>
#include <string>

namespace majidx {

// Raised when caller-supplied data violates an operation's precondition
// (duplicate letters, positions out of range, malformed text, ...).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an internal invariant that the construction guarantees is
// found broken. Seeing one of these is a defect, not a usage error.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace majidx
