#pragma once

#include <stdexcept>
#include <string>

namespace sfpow {

/// Input that cannot be parsed or whose shape is inconsistent.
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands living in rings with different variable counts.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside the mathematical domain of an operation (zero ideal,
/// unit ideal, non-square-free ideal, n = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computation refused because it would exceed a configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a checked exponent operation would overflow.
class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace sfpow
