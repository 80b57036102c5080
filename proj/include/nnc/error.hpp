#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nnc {

enum class ErrorCode {
  kDimensionMismatch,
  kEmptyCandidates,
  kSingleClass,
  kUndefinedDensity,
  kZeroMargin,
  kCoincidentPoints,
  kInvalidArgument,
  kEmptyActiveSet,
  kPrecondition,
  kTooLarge,
  kIo,
  kParse,
  kFingerprintMismatch,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nnc
