#pragma once

#include <stdexcept>
#include <string>

namespace jumpemm {

/// Malformed or out-of-domain input (invalid parameters, non-finite values).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition, e.g. a jump recorded in the
/// normal diffusion region.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoRootInBracket : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature could not reach its error target on the requested grid.
class RefinementFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jumpemm
