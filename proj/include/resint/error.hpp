#ifndef RESINT_ERROR_HPP
#define RESINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace resint {

/// Malformed input: polynomial text, job files, unknown variables.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a library operation (bad ring data, index out of range,
/// ring mismatch, ...).
class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold for the input
/// (e.g. the ideal is not perfect of height 2).
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A computation hit the configured degree or pair budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace resint

#endif
