#include "sponge/spatial_grid.hpp"

#include <algorithm>
#include <numeric>

#include "sponge/error.hpp"

namespace sponge {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SpatialGrid::SpatialGrid(const BoxSet& boxes, std::span<const std::int64_t> cell_size) : dim_(boxes.dim()) {
  const std::size_t n = boxes.size();
  std::vector<Corner> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = boxes.corner(i);
    for (int j = 0; j < dim_; ++j) {
      if (cell_size[j] < 1) throw Error(ErrorCode::InvalidArgument, "cell size must be positive");
      keys[i][j] = floor_div(c[j], cell_size[j]);
    }
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0u);
  std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  for (std::size_t k = 0; k < n; ++k) {
    const Corner& key = keys[order_[k]];
    if (cells_.empty() || cells_.back() != key) {
      cells_.push_back(key);
      begin_.push_back(static_cast<std::uint32_t>(k));
    }
  }
  begin_.push_back(static_cast<std::uint32_t>(n));
}

std::size_t SpatialGrid::find_cell(const Corner& key) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), key);
  if (it != cells_.end() && *it == key) return static_cast<std::size_t>(it - cells_.begin());
  return cells_.size();
}

std::vector<std::uint32_t> SpatialGrid::neighbors(std::size_t c) const {
  std::vector<std::uint32_t> out;
  int total = 1;
  for (int j = 0; j < dim_; ++j) total *= 3;
  for (int code = 0; code < total; ++code) {
    Corner key = cells_[c];
    int rest = code;
    for (int j = 0; j < dim_; ++j) {
      key[j] += rest % 3 - 1;
      rest /= 3;
    }
    const std::size_t found = find_cell(key);
    if (found != cells_.size()) out.push_back(static_cast<std::uint32_t>(found));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sponge
