#pragma once

#include <stdexcept>
#include <string>

namespace nok {

/// Base for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition (non-symmetric Gram, size
/// mismatch, out-of-range argument).
struct ContractError : Error {
  using Error::Error;
};

/// Input is well-formed but outside the supported geometry (divisor not
/// pseudo-effective, unsupported fibre scenario, inconsistent invariants).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace nok
