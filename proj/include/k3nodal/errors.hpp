#pragma once

#include <stdexcept>
#include <string>

namespace k3nodal {

/// Operand shapes do not agree (vector lengths, ragged rows).
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain of the operation.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on a value that does not satisfy its precondition.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested enumeration exceeds its budget.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace k3nodal
