#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression evaluation failed. Inside the transition relation this aborts
/// only the transition attempt that triggered it.
class EvalError : public Error {
 public:
  enum class Code {
    UndefinedAttribute,
    UnboundVariable,
    OperatorDomain,
    DomainViolation,
    ArityMismatch,
    UnknownProcess,
  };
  EvalError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A term violates a well-formedness rule (free variables, unguarded
/// recursion, unresolved calls, misplaced restriction references).
class WellFormednessError : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t frontier)
      : Error(what), frontier_(frontier) {}
  std::size_t frontier() const noexcept { return frontier_; }

 private:
  std::size_t frontier_;
};

}  // namespace abc
