#pragma once

#include <stdexcept>
#include <string>

namespace simplex {

/// A requested construction would exceed the configured node limit.
class SizeGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An oracle hit its node/edge/step budget before finishing.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A closed-form quantity that must reduce to an integer did not.
/// Signals a formula transcription bug, never a data problem.
class IntegralityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace simplex
