#pragma once

#include <stdexcept>
#include <string>

namespace hallpi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, group specs, generator files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A parameter outside the supported range (n, q, primes, flag dimensions).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An order/index/degree cap was exceeded; the caller must pick another route.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition does not hold (non-normal subgroup, element
/// outside the parent, broken automorphism, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace hallpi
