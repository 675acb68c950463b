#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbent {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied argument violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (points, tables, subspaces) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact division by p^n failed: the input was not a genuine spectrum.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts a proven statement. Never caught silently.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace pbent
