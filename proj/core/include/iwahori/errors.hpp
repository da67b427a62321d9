#pragma once

#include <stdexcept>
#include <string>

namespace iwahori {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (index out of range, rank too
/// small, wrong system kind, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A division that must be exact in the chosen ring was not.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Enumeration asked for more layers than the configured cap allows.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A defining relation failed to hold while constructing an algebra.
class RelationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace iwahori
