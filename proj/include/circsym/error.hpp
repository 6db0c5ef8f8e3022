#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circsym {

enum class ErrorCode {
  kZeroGenerator,
  kNotInverseClosed,
  kOutOfRange,
  kSizeCap,
  kLimitExceeded,
  kNotTwinFree,
  kWrongKind,
  kPartitionKindNone,
  kOddOrder,
  kBetaNotAutomorphism,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every library failure is reported through this type so the CLI can emit a
// machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circsym
