#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sponge {

enum class ErrorCode {
  EmptyDigits,
  DigitOutOfRange,
  DuplicateDigit,
  BaseTooSmall,
  BasesNotSorted,
  DimensionMismatch,
  DimensionTooLarge,
  AxisOutOfRange,
  AllAxesDegenerate,
  BudgetExceeded,
  DepthTooShallow,
  ArithmeticOverflow,
  InvalidCertificate,
  ProfileTooShort,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base of every error the library raises. The code is stable and machine readable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Rejected specification. `axis` is 1-based (0 when not tied to an axis).
class SpecError : public Error {
 public:
  SpecError(ErrorCode code, const std::string& message, int axis = 0, long long value = 0);

  int axis() const noexcept { return axis_; }
  long long value() const noexcept { return value_; }

 private:
  int axis_;
  long long value_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget, std::string_view what);

  /// Saturates at UINT64_MAX when the true requirement does not fit.
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

[[noreturn]] void throw_overflow(std::string_view where);

}  // namespace sponge
