#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sponge/geometry.hpp"

namespace sponge {

/// Buckets the boxes of a BoxSet into cells of `cell_size[j]` grid units per
/// axis. Any pair of boxes whose corners differ by at most cell_size[j] on every
/// axis lies in the same or in adjacent cells.
class SpatialGrid {
 public:
  SpatialGrid(const BoxSet& boxes, std::span<const std::int64_t> cell_size);

  std::size_t cell_count() const noexcept { return cells_.size(); }
  /// Box indices in cell `c`, ascending.
  std::span<const std::uint32_t> members(std::size_t c) const {
    return std::span<const std::uint32_t>(order_).subspan(begin_[c], begin_[c + 1] - begin_[c]);
  }
  /// Indices of the (up to 3^d) occupied cells adjacent to `c`, including `c`, ascending.
  std::vector<std::uint32_t> neighbors(std::size_t c) const;

 private:
  std::size_t find_cell(const Corner& key) const;

  int dim_;
  std::vector<Corner> cells_;
  std::vector<std::uint32_t> begin_;
  std::vector<std::uint32_t> order_;
};

}  // namespace sponge
