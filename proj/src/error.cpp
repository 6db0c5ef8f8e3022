#include "circsym/error.hpp"

namespace circsym {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroGenerator: return "ZeroGenerator";
    case ErrorCode::kNotInverseClosed: return "NotInverseClosed";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kLimitExceeded: return "LimitExceeded";
    case ErrorCode::kNotTwinFree: return "NotTwinFree";
    case ErrorCode::kWrongKind: return "WrongKind";
    case ErrorCode::kPartitionKindNone: return "PartitionKindNone";
    case ErrorCode::kOddOrder: return "OddOrder";
    case ErrorCode::kBetaNotAutomorphism: return "BetaNotAutomorphism";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace circsym
