#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sponge/model.hpp"
#include "sponge/parallel.hpp"
#include "sponge/rational.hpp"

namespace sponge {

using Corner = std::array<std::int64_t, kMaxDim>;

/// Axis-aligned box prod_j [a_j / n_j^e_j, (a_j + 1) / n_j^e_j]. Corners are
/// signed so that translated copies (outside [0,1]^d) share the type.
struct ExactBox {
  int dim = 0;
  Corner corner{};
  std::array<int, kMaxDim> exponent{};

  friend bool operator==(const ExactBox&, const ExactBox&) = default;
};

struct BoxDistance {
  Rational gap2;   // squared Euclidean distance between the closed boxes
  Rational span2;  // squared largest corner-to-corner distance
};

BoxDistance box_distance_bounds(const ExactBox& a, const ExactBox& b, std::span<const int> bases);
bool boxes_intersect(const ExactBox& a, const ExactBox& b, std::span<const int> bases);

/// A set of boxes sharing one shape (same exponent per axis), stored flat.
class BoxSet {
 public:
  BoxSet() = default;
  BoxSet(std::vector<int> bases, std::vector<int> exponents);
  BoxSet(std::vector<int> bases, std::vector<int> exponents, std::vector<std::int64_t> flat_corners);

  int dim() const noexcept { return static_cast<int>(bases_.size()); }
  std::span<const int> bases() const noexcept { return bases_; }
  std::span<const int> exponents() const noexcept { return exponents_; }
  /// n_j^{e_j}, the number of grid cells along axis j inside [0,1].
  std::span<const std::int64_t> resolution() const noexcept { return resolution_; }

  std::size_t size() const noexcept { return dim() == 0 ? 0 : corners_.size() / dim(); }
  bool empty() const noexcept { return size() == 0; }

  std::span<const std::int64_t> corner(std::size_t i) const {
    return std::span<const std::int64_t>(corners_).subspan(i * dim(), dim());
  }
  std::span<const std::int64_t> flat() const noexcept { return corners_; }

  ExactBox box(std::size_t i) const;
  void push_back(std::span<const std::int64_t> corner);
  void reserve(std::size_t n) { corners_.reserve(n * dim()); }

  /// Sorts lexicographically (axis 1 most significant) and drops duplicates.
  void sort_unique();
  bool is_sorted_unique() const;
  /// Index of `corner` in a sorted set, or size() when absent.
  std::size_t find(std::span<const std::int64_t> corner) const;

  bool touches_unit_boundary(std::size_t i) const;
  bool inside_unit_cube(std::size_t i) const;

  int level = -1;  // approximation level the set was built for, -1 when not applicable

  friend bool operator==(const BoxSet& a, const BoxSet& b) {
    return a.bases_ == b.bases_ && a.exponents_ == b.exponents_ && a.corners_ == b.corners_;
  }

 private:
  std::vector<int> bases_;
  std::vector<int> exponents_;
  std::vector<std::int64_t> resolution_;
  std::vector<std::int64_t> corners_;
};

/// Sequence of digit indices (into SpongeSpec::digit); the empty word names [0,1]^d.
struct Word {
  std::vector<std::uint32_t> letters;

  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Largest l with n_j^l <= n_d^k, by exact integer comparison. `axis` is 1-based.
int ell(const SpongeSpec& spec, int axis, int level);
std::vector<int> ell_all(const SpongeSpec& spec, int level);

ExactBox pillar_of(const SpongeSpec& spec, const Word& word);

/// All N^k level-k pillars, sorted. Throws BudgetExceeded past the budget.
BoxSet pillars(const SpongeSpec& spec, int level, const Limits& limits = {});

/// Deduplicated level-k approximate boxes (per-axis exponent ell_j(k)), sorted.
BoxSet approximate_boxes(const SpongeSpec& spec, int level, const Limits& limits = {});

/// Squared diameter of one box of the given shape.
Rational box_diameter2(std::span<const int> bases, std::span<const int> exponents);

/// Approximate boxes at `depth` restricted to the cylinder of `prefix`, each
/// carrying the level-L pillars (L = ell_1(depth)) of the words generating it.
/// Images of the maps' fixed points under those words are points of the
/// attractor inside the box.
struct Cover {
  BoxSet boxes;
  int depth = 0;
  int word_length = 0;
  Word prefix;
  std::vector<std::int64_t> pillar_corners;   // flat, exponent word_length on every axis
  std::vector<std::uint32_t> pillar_begin;    // CSR offsets into pillar_corners / dim, size boxes + 1
  std::vector<Corner> fixed_points;           // distinct numerators f with fixed point f_j / (n_j - 1)

  std::size_t pillar_count(std::size_t box) const { return pillar_begin[box + 1] - pillar_begin[box]; }
  std::span<const std::int64_t> pillar(std::size_t index) const {
    const auto d = static_cast<std::size_t>(boxes.dim());
    return std::span<const std::int64_t>(pillar_corners).subspan(index * d, d);
  }
};

Cover build_cover(const SpongeSpec& spec, int depth, const Word& prefix = {}, const Limits& limits = {});

/// Box dump: columns a_1,e_1,...,a_d,e_d, one row per box, in set order.
void write_box_csv(std::ostream& out, const BoxSet& boxes);

}  // namespace sponge
