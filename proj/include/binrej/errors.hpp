#pragma once

#include <stdexcept>
#include <string>

namespace binrej {

// A caller broke a documented precondition (bad argument, out-of-range size).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal postcondition failed; the library state cannot be trusted.
class InvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The optional outer-loop budget of a rejection session ran out.
class LoopLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binrej
