#pragma once

#include <stdexcept>
#include <string>

namespace essv {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition (bad table, unknown symbol,
/// unsupported variety, exceeded size cap).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two computations that must agree did not. Always a bug in this library.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace essv
