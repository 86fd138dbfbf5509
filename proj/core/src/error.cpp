#include "sponge/error.hpp"

namespace sponge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDigits: return "EmptyDigits";
    case ErrorCode::DigitOutOfRange: return "DigitOutOfRange";
    case ErrorCode::DuplicateDigit: return "DuplicateDigit";
    case ErrorCode::BaseTooSmall: return "BaseTooSmall";
    case ErrorCode::BasesNotSorted: return "BasesNotSorted";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::AxisOutOfRange: return "AxisOutOfRange";
    case ErrorCode::AllAxesDegenerate: return "AllAxesDegenerate";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DepthTooShallow: return "DepthTooShallow";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::ProfileTooShort: return "ProfileTooShort";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SpecError::SpecError(ErrorCode code, const std::string& message, int axis, long long value)
    : Error(code, message), axis_(axis), value_(value) {}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget, std::string_view what)
    : Error(ErrorCode::BudgetExceeded,
            std::string(what) + " needs " +
                (required == UINT64_MAX ? std::string("more than 2^64") : std::to_string(required)) +
                " boxes, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

void throw_overflow(std::string_view where) {
  throw Error(ErrorCode::ArithmeticOverflow, "integer overflow in " + std::string(where));
}

}  // namespace sponge
