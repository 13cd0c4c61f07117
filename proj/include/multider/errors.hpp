#pragma once

#include <stdexcept>
#include <string>

namespace multider {

// Caller supplied something the operation cannot accept.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrixError : public InputError {
 public:
  using InputError::InputError;
};

// A derivation handed to a Saito check is not in the module at all.
class MembershipError : public InputError {
 public:
  using InputError::InputError;
};

// A rank-2 localization where the incremented exponents share both values.
class UndefinedExponentError : public InputError {
 public:
  using InputError::InputError;
};

// Something the mathematics guarantees did not happen. Always a bug.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace multider
