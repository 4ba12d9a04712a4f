#pragma once

#include <stdexcept>
#include <string>

namespace topvs {

/// Raised when user-supplied data or arguments violate a precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal postcondition fails; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace topvs
