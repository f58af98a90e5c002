#pragma once

#include <stdexcept>
#include <string>

namespace maxorder {

/// Argument outside the mathematical domain of an operation (t <= 0, u outside (0,1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input: unparsable spec strings, length mismatches, bad grid overrides.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem whose hypotheses were verified predicted an order that the grid check refuted.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace maxorder
