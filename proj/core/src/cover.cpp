#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "sponge/error.hpp"
#include "sponge/geometry.hpp"

namespace sponge {

Cover build_cover(const SpongeSpec& spec, int depth, const Word& prefix, const Limits& limits) {
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "negative depth");
  if (static_cast<int>(prefix.size()) > depth) {
    throw Error(ErrorCode::DepthTooShallow, "cover depth " + std::to_string(depth) + " is shorter than the cylinder word");
  }
  const int d = spec.dim();
  const auto ells = ell_all(spec, depth);
  const int L = ells.front();
  const int tail = L - static_cast<int>(prefix.size());
  check_budget(saturating_pow(spec.size(), tail), limits, "approximate box enumeration");

  std::vector<std::int64_t> shrink(d);
  for (int j = 0; j < d; ++j) {
    (void)checked_mul(checked_pow(spec.base(j), L), spec.base(j) - 1 > 0 ? spec.base(j) - 1 : 1);
    shrink[j] = checked_pow(spec.base(j), L - ells[j]);
  }

  const ExactBox root = pillar_of(spec, prefix);
  std::vector<std::int64_t> seed(root.corner.begin(), root.corner.begin() + d);
  std::vector<std::int64_t> words = detail::expand_words(spec, std::move(seed), tail, limits);
  const std::size_t count = words.size() / d;

  std::vector<std::int64_t> box_of(words.size());
  for (std::size_t w = 0; w < count; ++w) {
    for (int j = 0; j < d; ++j) box_of[w * d + j] = words[w * d + j] / shrink[j];
  }

  std::vector<std::uint32_t> order(count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const std::int64_t* ba = box_of.data() + static_cast<std::size_t>(a) * d;
    const std::int64_t* bb = box_of.data() + static_cast<std::size_t>(b) * d;
    for (int j = 0; j < d; ++j) {
      if (ba[j] != bb[j]) return ba[j] < bb[j];
    }
    const std::int64_t* wa = words.data() + static_cast<std::size_t>(a) * d;
    const std::int64_t* wb = words.data() + static_cast<std::size_t>(b) * d;
    return std::lexicographical_compare(wa, wa + d, wb, wb + d);
  });

  Cover cover;
  cover.depth = depth;
  cover.word_length = L;
  cover.prefix = prefix;
  std::vector<std::int64_t> box_corners;
  cover.pillar_corners.reserve(words.size());
  cover.pillar_begin.reserve(count + 1);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t w = order[k];
    const std::int64_t* b = box_of.data() + w * d;
    const bool new_box = k == 0 || !std::equal(b, b + d, box_corners.end() - d);
    if (new_box) {
      box_corners.insert(box_corners.end(), b, b + d);
      cover.pillar_begin.push_back(static_cast<std::uint32_t>(k));
    }
    cover.pillar_corners.insert(cover.pillar_corners.end(), words.begin() + static_cast<std::ptrdiff_t>(w * d),
                                words.begin() + static_cast<std::ptrdiff_t>((w + 1) * d));
  }
  cover.pillar_begin.push_back(static_cast<std::uint32_t>(count));
  cover.boxes = BoxSet(std::vector<int>(spec.bases().begin(), spec.bases().end()), ells, std::move(box_corners));
  cover.boxes.level = depth;

  for (std::size_t i = 0; i < spec.size(); ++i) {
    Corner f{};
    for (int j = 0; j < d; ++j) f[j] = spec.digit(i)[j];
    cover.fixed_points.push_back(f);
  }
  return cover;
}

}  // namespace sponge
