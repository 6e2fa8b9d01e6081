#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcg {

/// Process exit codes shared by the library and the command-line tool.
enum class ExitCode : int {
  kOk = 0,
  kParse = 2,
  kIllegalMove = 3,
  kVerification = 4,
  kResourceLimit = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed input text. Carries a 1-based line and column when known (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(ExitCode::kParse, format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    std::string s = "line " + std::to_string(line);
    if (column != 0) s += ", column " + std::to_string(column);
    return s + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// A name that the curve registry does not know.
class UnknownCurve : public Error {
 public:
  explicit UnknownCurve(const std::string& name)
      : Error(ExitCode::kParse, "unknown curve '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Registry data that contradicts itself (lantern identity, pairing bounds, flags).
class RegistryError : public Error {
 public:
  explicit RegistryError(const std::string& what) : Error(ExitCode::kVerification, what) {}
};

enum class MoveErrorKind {
  kNonDisjoint,
  kPatternMismatch,
  kNonUnitIntersection,
  kIndexOutOfRange,
  kConfigMismatch,
  kUnknownConfig,
  kNotRelator,
  kNoSimplification,
};

const char* to_string(MoveErrorKind kind);

class MoveError : public Error {
 public:
  MoveError(MoveErrorKind kind, const std::string& what)
      : Error(ExitCode::kIllegalMove, std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  MoveErrorKind kind() const noexcept { return kind_; }

 private:
  MoveErrorKind kind_;
};

/// Thrown when an exact integer computation would leave the 64-bit range.
class ArithmeticOverflow : public Error {
 public:
  explicit ArithmeticOverflow(const std::string& where)
      : Error(ExitCode::kResourceLimit, "integer overflow in " + where) {}
};

class VerificationError : public Error {
 public:
  explicit VerificationError(const std::string& what) : Error(ExitCode::kVerification, what) {}
};

/// Checked int64 arithmetic.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace mcg
