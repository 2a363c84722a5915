#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnorinf {

enum class ErrorKind {
  Structural,
  DegenerateInput,
  NotMixed,
  NotCurve,
  NonRationalBranch,
  NonIsolatedGerm,
  NonInvariantJacobian,
  NotApplicable,
  DegenerateWeights,
  HypothesisFailure,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in polynomial text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(ErrorKind::Parse, message + " at line " + std::to_string(line) +
                                    ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace milnorinf
