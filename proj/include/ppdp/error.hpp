#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ppdp {

enum class ErrorCode {
  InvalidArgument,
  NonFiniteInput,
  DimensionMismatch,
  EmptyIndexSet,
  IndexOutOfRange,
  ZeroColumns,
  ZeroCoordinate,
  ZeroColumn,
  DegenerateDirection,
  EmptyCut,
  IterationLimitExceeded,
  BudgetExhausted,
  NumericalBreakdown,
  InstanceTooLarge,
  InvalidSpec,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// ParseError with the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ppdp
