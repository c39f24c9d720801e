#pragma once

#include <stdexcept>
#include <string>

namespace meterpark {

// Malformed preference list or argument shape.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the range where a formula or characterization holds.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Work would exceed the configured enumeration budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A floating-point closed form landed too far from an integer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes disagreed on a value.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace meterpark
