#pragma once

#include <stdexcept>
#include <string>

namespace wadefect {

/// Malformed or invalid user input (bad permutation, non-unimodular action,
/// unknown place name, unsupported degree).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A closure or construction exceeded a configured size bound.
class SizeError : public InputError {
 public:
  using InputError::InputError;
};

/// Operands that do not live in the same ambient object.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Two independent computations that must agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wadefect
