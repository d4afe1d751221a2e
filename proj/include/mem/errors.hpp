#pragma once

#include <stdexcept>
#include <string>

namespace mem {

/// Argument outside the mathematical domain of a function (x < 0, z >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Result magnitude not representable in double precision, even after
/// extended-range scaling.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Request exceeds a documented implementation cap (order, argument, size).
class CapabilityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Singular preconditioner (interior Dirichlet eigenvalue) or singular system.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scene fails validation; the message lists the violations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scene document or other structured input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mem
