#pragma once

#include <stdexcept>
#include <string>

namespace entrans {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the documented range of an operation.
struct DomainError : Error {
  using Error::Error;
};

struct NotHermitian : DomainError {
  using DomainError::DomainError;
};

struct NotUnitary : DomainError {
  using DomainError::DomainError;
};

// make_state received an identically zero coefficient matrix.
struct ZeroState : DomainError {
  using DomainError::DomainError;
};

// A transmission eigenvalue exceeds 1 beyond tolerance (active medium).
struct GainMedium : DomainError {
  using DomainError::DomainError;
};

// T_minus = 0: the symmetry ratio tau diverges.
struct SingularChannel : DomainError {
  using DomainError::DomainError;
};

// Normalization Z below tol_block: no coincidence counts survive.
struct FullyBlocked : Error {
  using Error::Error;
};

// A result violated an internal invariant by more than rounding allows.
struct InternalError : Error {
  using Error::Error;
};

// Malformed scenario file or bad command-line usage.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace entrans
