#ifndef BRACEFORGE_ERRORS_HPP_
#define BRACEFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace braceforge {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element or matrix dimensions do not agree with the group spec.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A matrix is not a well-defined automorphism, or is not invertible.
class ValidityError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration or closure bound would be exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A persisted file is truncated, malformed or belongs to another group.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Text could not be parsed. Parse failures in files are integrity failures.
class ParseError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

// A documented precondition of an operation was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

// The input lies outside the supported mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace braceforge

#endif  // BRACEFORGE_ERRORS_HPP_
