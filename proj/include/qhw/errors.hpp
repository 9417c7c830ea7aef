#pragma once

#include <stdexcept>
#include <string>

namespace qhw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands that cannot be combined (mismatched truncation orders, ranks).
struct UsageError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input.
struct ParseError : Error {
  using Error::Error;
};

/// A rewrite system that violates the termination witness or is not confluent.
struct ConfigurationError : Error {
  using Error::Error;
};

/// Exponential of an element with a parameter-free term.
struct NonNilpotentError : Error {
  using Error::Error;
};

/// Matrix exponential of entries that do not commute pairwise.
struct UnsupportedMatrixError : Error {
  using Error::Error;
};

/// Basis change that does not preserve the Lie bracket.
struct AutomorphismError : Error {
  using Error::Error;
};

/// Order-by-order solve that has no consistent solution.
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace qhw
