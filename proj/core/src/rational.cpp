#include "sponge/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "sponge/error.hpp"

namespace sponge {

namespace {

// Values below 2^125 leave room for a handful of additions before 2^127.
const BigInt& fast_ceiling() {
  static const BigInt ceiling = BigInt(1) << 125;
  return ceiling;
}

Int128 to_int128(const BigInt& v) {
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>(v & mask);
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  return (static_cast<Int128>(hi) << 64) | static_cast<Int128>(lo);
}

long long parse_integer(std::string_view text) {
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw_overflow("checked_mul");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw_overflow("checked_add");
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out = saturating_mul(out, base);
  return out;
}

BigInt big_pow(std::int64_t base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

Rational parse_rational(std::string_view text) {
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    const long long base = parse_integer(text.substr(0, caret));
    const long long exponent = parse_integer(text.substr(caret + 1));
    if (base == 0 || exponent < -4096 || exponent > 4096) {
      throw Error(ErrorCode::InvalidArgument, "bad power '" + std::string(text) + "'");
    }
    const BigInt magnitude = big_pow(base, static_cast<int>(exponent < 0 ? -exponent : exponent));
    return exponent < 0 ? Rational(BigInt(1), magnitude) : Rational(magnitude);
  }
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const long long num = parse_integer(text.substr(0, slash));
    const long long den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
    return Rational(BigInt(num), BigInt(den));
  }
  return Rational(BigInt(parse_integer(text)));
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

double sqrt_to_double(const Rational& squared) {
  return static_cast<double>(std::sqrt(squared.convert_to<long double>()));
}

bool exact_sqrt(const Rational& squared, Rational& root) {
  if (squared < 0) return false;
  const BigInt& num = numerator(squared);
  const BigInt& den = denominator(squared);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn, rd);
  return true;
}

AxisScale::AxisScale(std::vector<BigInt> units) : units_(std::move(units)) {
  if (units_.empty() || static_cast<int>(units_.size()) > kMaxDim) {
    throw Error(ErrorCode::InvalidArgument, "AxisScale dimension out of range");
  }
  denominator_ = 1;
  for (const auto& u : units_) denominator_ *= u * u;
  weights_.resize(units_.size());
  fast_ = true;
  for (std::size_t j = 0; j < units_.size(); ++j) {
    weights_[j] = 1;
    for (std::size_t i = 0; i < units_.size(); ++i) {
      if (i != j) weights_[j] *= units_[i] * units_[i];
    }
    if (weights_[j] >= fast_ceiling()) fast_ = false;
  }
  if (fast_) {
    for (std::size_t j = 0; j < units_.size(); ++j) fast_weights_[j] = to_int128(weights_[j]);
  }
}

Int128 AxisScale::scaled(std::span<const std::int64_t> diffs) const {
  if (!fast_) throw_overflow("AxisScale::scaled (units exceed 125 bits)");
  Int128 sum = 0;
  for (int j = 0; j < dim(); ++j) {
    const Int128 g = diffs[j];
    Int128 term;
    if (__builtin_mul_overflow(g * g, fast_weights_[j], &term)) throw_overflow("AxisScale::scaled");
    if (__builtin_add_overflow(sum, term, &sum)) throw_overflow("AxisScale::scaled");
  }
  return sum;
}

Rational AxisScale::value(std::span<const std::int64_t> diffs) const {
  BigInt sum = 0;
  for (int j = 0; j < dim(); ++j) {
    const BigInt g = diffs[j];
    sum += g * g * weights_[j];
  }
  return Rational(sum, denominator_);
}

SquaredNormBound::SquaredNormBound(const AxisScale& scale, const Rational& bound) : dim_(scale.dim()) {
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "negative squared bound");
  const BigInt& num = numerator(bound);
  const BigInt& den = denominator(bound);
  big_weights_.resize(dim_);
  fast_ = true;
  for (int j = 0; j < dim_; ++j) {
    big_weights_[j] = scale.weights_[j] * den;
    if (big_weights_[j] >= fast_ceiling()) fast_ = false;
  }
  big_limit_ = num * scale.denominator_;
  if (big_limit_ >= fast_ceiling()) fast_ = false;
  if (fast_) {
    for (int j = 0; j < dim_; ++j) weights_[j] = to_int128(big_weights_[j]);
    limit_ = to_int128(big_limit_);
  }
}

bool SquaredNormBound::within(std::span<const std::int64_t> diffs) const {
  if (fast_) {
    // limit_ < 2^125, so any overflow of a nonnegative partial sum means "above".
    Int128 sum = 0;
    for (int j = 0; j < dim_; ++j) {
      const Int128 g = diffs[j];
      Int128 term;
      if (__builtin_mul_overflow(g * g, weights_[j], &term)) return false;
      if (__builtin_add_overflow(sum, term, &sum)) return false;
      if (sum > limit_) return false;
    }
    return true;
  }
  BigInt sum = 0;
  for (int j = 0; j < dim_; ++j) {
    const BigInt g = diffs[j];
    sum += g * g * big_weights_[j];
    if (sum > big_limit_) return false;
  }
  return true;
}

}  // namespace sponge
