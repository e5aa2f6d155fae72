#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cdm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MixedFields : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// An exact integer division left a remainder. Signals an internal bug.
class NonIntegralQuotient : public Error {
 public:
  using Error::Error;
};

/// Operands disagree on arity, truncation cap, reducedness or field.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A capped power series was asked to absorb an argument with a constant term.
class NonReducedArgument : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A variable index outside the declared arity.
class ArityError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdm
