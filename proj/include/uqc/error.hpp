#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uqc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Division by the zero rational function.
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Specialising q hit a zero of a denominator.
class PoleError : public Error {
public:
  using Error::Error;
};

/// A computation that must succeed for mathematical reasons did not
/// (inconsistent linear system, failed verification, ...).
class MathError : public Error {
public:
  using Error::Error;
};

} // namespace uqc
