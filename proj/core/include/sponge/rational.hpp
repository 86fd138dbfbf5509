#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sponge {

inline constexpr int kMaxDim = 6;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
__extension__ using Int128 = __int128;

// Checked 64-bit helpers; every failure raises ArithmeticOverflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, int exponent);

/// Saturating unsigned power, for budget arithmetic.
std::uint64_t saturating_pow(std::uint64_t base, int exponent);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

BigInt big_pow(std::int64_t base, int exponent);

/// Accepts "p", "p/q" and "a^-k" / "a^k" forms (whitespace is not allowed).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
double to_double(const Rational& value);
/// sqrt of a nonnegative rational, rounded through long double.
double sqrt_to_double(const Rational& squared);
/// Exact test of sqrt(squared) being rational; returns the root when it is.
bool exact_sqrt(const Rational& squared, Rational& root);

/// Per-axis units for exact squared norms: a vector of integer differences `g`
/// denotes the squared length sum_j (g_j / unit_j)^2.
class AxisScale {
 public:
  AxisScale() = default;
  explicit AxisScale(std::vector<BigInt> units);

  int dim() const noexcept { return static_cast<int>(units_.size()); }
  const BigInt& unit(int axis) const { return units_[axis]; }

  /// Common denominator prod_j unit_j^2.
  const BigInt& denominator() const noexcept { return denominator_; }

  /// Numerator over denominator(); raises ArithmeticOverflow past 127 bits.
  Int128 scaled(std::span<const std::int64_t> diffs) const;
  Rational value(std::span<const std::int64_t> diffs) const;

 private:
  friend class SquaredNormBound;

  std::vector<BigInt> units_;
  std::vector<BigInt> weights_;  // prod_{i != j} unit_i^2
  BigInt denominator_;
  bool fast_ = false;
  std::array<Int128, kMaxDim> fast_weights_{};
};

/// Exact predicate `squared norm <= bound` over one AxisScale. Uses 128-bit
/// arithmetic when the cross-multiplied bound fits and arbitrary precision
/// otherwise; the answer never depends on which path runs.
class SquaredNormBound {
 public:
  SquaredNormBound(const AxisScale& scale, const Rational& bound);

  bool within(std::span<const std::int64_t> diffs) const;

 private:
  int dim_;
  bool fast_;
  std::array<Int128, kMaxDim> weights_{};
  Int128 limit_ = 0;
  std::vector<BigInt> big_weights_;
  BigInt big_limit_;
};

}  // namespace sponge
