#pragma once

#include <stdexcept>
#include <string>

namespace hyperframe {

/// Raised when an input is well-formed but violates a mathematical
/// precondition: disconnected hypergraph, arity mismatch, infeasible
/// generator parameters, a map that is not engaged, and so on.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a file or string cannot be parsed into the expected format.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public FormatError {
 public:
  using FormatError::FormatError;
};

}  // namespace hyperframe
