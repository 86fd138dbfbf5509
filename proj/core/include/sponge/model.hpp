#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace sponge {

enum class SpongeKind { Cube, Sponge, Mixed };

std::string_view to_string(SpongeKind kind);

/// Bases and digit set of a diagonal self-affine IFS on [0,1]^d.
///
/// Digits are stored row-major and sorted lexicographically; index `i` of
/// `digit(i)` is the letter used by words. Instances only come out of
/// validate_spec (directly or through project / reduce_degenerate), so the
/// invariants below always hold:
///   - 2 <= bases[0] <= bases[1] <= ... <= bases[d-1]
///   - digits nonempty, distinct, 0 <= digit[j] < bases[j]
class SpongeSpec {
 public:
  int dim() const noexcept { return static_cast<int>(bases_.size()); }
  std::span<const int> bases() const noexcept { return bases_; }
  int base(int axis) const { return bases_[axis]; }
  /// Largest base n_d.
  int top_base() const { return bases_.back(); }

  std::size_t size() const noexcept { return digits_.size() / bases_.size(); }
  std::span<const int> digit(std::size_t i) const {
    return std::span<const int>(digits_).subspan(i * bases_.size(), bases_.size());
  }
  std::span<const int> flat_digits() const noexcept { return digits_; }
  std::vector<std::vector<int>> digit_list() const;

  SpongeKind kind() const noexcept { return kind_; }

  bool contains(std::span<const int> digit) const;

  friend bool operator==(const SpongeSpec&, const SpongeSpec&) = default;

 private:
  friend SpongeSpec validate_spec(int, std::vector<int>, const std::vector<std::vector<int>>&);
  SpongeSpec() = default;

  std::vector<int> bases_;
  std::vector<int> digits_;
  SpongeKind kind_ = SpongeKind::Cube;
};

/// Checks and normalizes a raw specification. Throws SpecError with one of
/// EmptyDigits, DigitOutOfRange, DuplicateDigit, BaseTooSmall, BasesNotSorted,
/// DimensionMismatch, DimensionTooLarge.
SpongeSpec validate_spec(int dimension, std::vector<int> bases, const std::vector<std::vector<int>>& digits);

/// Major projection onto the first `axes` coordinates; project(spec, dim) == spec.
SpongeSpec project(const SpongeSpec& spec, int axes);

/// Keeps the listed 1-based axes, deduplicating the projected digits.
SpongeSpec restrict_axes(const SpongeSpec& spec, std::span<const int> axes);

struct Reduction {
  SpongeSpec spec;
  std::vector<int> kept_axes;  // 1-based axes of the input that survive
  int original_dim = 0;

  bool changed() const { return static_cast<int>(kept_axes.size()) != original_dim; }
};

/// Axis j is degenerate when every digit sits on the same face (all 0 or all n_j - 1).
bool is_degenerate_axis(const SpongeSpec& spec, int axis);
bool is_degenerated(const SpongeSpec& spec);

/// Removes degenerate axes until none remain. Throws AllAxesDegenerate when
/// the attractor is a single corner point.
Reduction reduce_degenerate(const SpongeSpec& spec);

bool is_full_product(const SpongeSpec& spec);

/// Number of distinct digits after projecting onto the first `axes` axes (#pi_0 = 1).
std::size_t projected_count(const SpongeSpec& spec, int axes);

struct DimensionTerm {
  int base;
  std::size_t count;           // #pi_j(D)
  std::size_t previous_count;  // #pi_{j-1}(D)
  double value;                // log(count / previous_count) / log(base)
};

struct DimensionValue {
  double value;
  std::vector<DimensionTerm> terms;
};

DimensionValue box_dimension(const SpongeSpec& spec);

}  // namespace sponge
