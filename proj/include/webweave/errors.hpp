#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace webweave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A tableau or web has the wrong shape for the requested operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A tableau is not a Russell tableau; what() names the reason.
class NotRussellError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Half-edge structure is malformed (rotation and pairing disagree).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Lookup of a web in an enumerated family failed.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Text or JSON input could not be parsed. Positions are 1-indexed; line 0
/// means the input parsed but does not match the expected schema.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : ParseError(message, 0, 0) {}
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace webweave
