#pragma once

#include <stdexcept>
#include <string>

namespace balforest {

/// Malformed or inconsistent arguments (bad vertex, size mismatch, cycle in a forest).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A balanced colouring was requested for n with C(n,2) odd.
class ParityError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An operation was called outside the situation it is defined for.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sampling ran out of budget before finding both a non-positive and a
/// non-negative embedding.
class SignSearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact oracle refused an enumeration larger than its budget.
class OracleRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace balforest
