#pragma once

#include <stdexcept>
#include <string>

namespace rota {

// Malformed input: bad shapes, out-of-range indices, singular bases, ...
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for this input
// (e.g. the antichain slice-rank formula on a non-antichain support).
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Bad option values (unknown strategy names, missing flags).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured computation guard (term count, enumeration size) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rota
