#pragma once

#include <stdexcept>
#include <string>

namespace flownet {

// Base of every error the library throws. The CLI maps subclasses to exit
// codes: InputError -> 2, BudgetError -> 3, PreconditionError -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: syntax errors, invalid networks or flows.
class InputError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but violates an operation's precondition
// (cyclic network given to an acyclic-only algorithm, lambda < 2, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace flownet
