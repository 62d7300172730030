#pragma once

#include <stdexcept>
#include <string>

namespace dckpell {

// Division by zero, non-invertible divisors.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arguments outside the mathematical domain of an operation (k <= 0,
// mismatched radicands, a radical part where a rational was required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown identity, missing or extra parameter bindings.
class BindingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bindings that are well-formed but violate an identity's index range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A self-check inside the library failed. Never expected in practice.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dckpell
