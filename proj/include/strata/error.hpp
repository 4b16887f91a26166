#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strata {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownAtomError : public Error {
 public:
  using Error::Error;
};

class UnknownArgumentError : public Error {
 public:
  using Error::Error;
};

class DuplicateArgumentError : public Error {
 public:
  using Error::Error;
};

class ArgumentMismatchError : public Error {
 public:
  using Error::Error;
};

class IncompatibleLabelingError : public Error {
 public:
  using Error::Error;
};

class LimitExceededError : public Error {
 public:
  using Error::Error;
};

// Raised when an enumeration outgrows its configured budget.
class TruncationError : public Error {
 public:
  using Error::Error;
};

class InconsistentKnowledgeBaseError : public Error {
 public:
  using Error::Error;
};

class NotStratifiedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// More than one top-level '|' inside a conditional.
class AmbiguousBarError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace strata
