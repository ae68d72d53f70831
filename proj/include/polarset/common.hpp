#pragma once

#include <stdexcept>
#include <string>

namespace polarset {

// Base for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Missing or invalid table data, bad field parameters, broken tower setup.
struct ConfigError : Error {
  using Error::Error;
};

// Mathematically meaningless request (inverse of zero, element outside a
// subfield, mismatched fields or dimensions).
struct DomainError : Error {
  using Error::Error;
};

// Caller misuse that is not a math-domain issue (degenerate geometric input,
// bad CLI arguments).
struct UsageError : Error {
  using Error::Error;
};

// A guard against runaway enumeration fired.
struct ResourceError : Error {
  using Error::Error;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace polarset
