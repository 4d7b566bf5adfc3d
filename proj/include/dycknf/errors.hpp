#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dycknf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed grammar or Dyck-word text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A grammar whose symbols or rules break the structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input outside its domain (non-CNF grammar,
/// out-of-range position, derivation too short, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Trace-words need a derivation of at least three steps.
class DerivationTooShort : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace dycknf
