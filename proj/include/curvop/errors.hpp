#pragma once

#include <stdexcept>
#include <string>

namespace curvop {

/// Array shape or dimension does not match what the operation needs.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments are well-shaped but violate an operation's precondition.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Eigensolver or refinement failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace curvop
