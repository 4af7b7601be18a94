#pragma once

#include <stdexcept>
#include <string>

namespace finglobal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation, wrong dimensions, non-subgroup, etc.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A computed identity that must hold did not hold.
class Inconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace finglobal
