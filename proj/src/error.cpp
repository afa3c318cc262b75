#include "ppdp/error.hpp"

namespace ppdp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyIndexSet: return "EmptyIndexSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroColumns: return "ZeroColumns";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::DegenerateDirection: return "DegenerateDirection";
    case ErrorCode::EmptyCut: return "EmptyCut";
    case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ppdp
