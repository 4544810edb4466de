#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

// Input outside the domain of a mathematical operation (e.g. nce of x >= -1).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Manifold parameters that violate the supported normalization.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input for which no classification is implemented (e0 != -1).
class UnsupportedCase : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Enumeration would exceed the configured state-space cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed. Always a bug or a refuted claim, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace seifert
