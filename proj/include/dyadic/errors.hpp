#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

// Malformed input text: element literals, field names, lattice files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input outside the domain of an operation.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Not enough known digits to decide a question about an element.
struct PrecisionError : DomainError {
  using DomainError::DomainError;
};

}  // namespace dyadic
