#pragma once

#include <stdexcept>
#include <string>

namespace grich {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad alphabet, non-bijective map, invalid source parameters.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The analyzed prefix is too short for the requested computation.
class InsufficientPrefixError : public Error {
 public:
  using Error::Error;
};

/// A checked identity or invariant does not hold.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace grich
