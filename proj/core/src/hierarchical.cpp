#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "sponge/components.hpp"
#include "sponge/error.hpp"
#include "sponge/union_find.hpp"

namespace sponge {

namespace {

// One level: boxes sorted lexicographically with their component labels.
struct Level {
  BoxSet boxes;
  std::vector<std::uint32_t> labels;
  std::size_t count = 0;
};

}  // namespace

ComponentSummary components_hierarchical(const SpongeSpec& spec, int level, const Limits& limits) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  check_budget(saturating_pow(spec.size(), level), limits, "hierarchical component analysis");
  const int d = spec.dim();
  const std::size_t N = spec.size();
  const std::vector<int> bases(spec.bases().begin(), spec.bases().end());
  for (int j = 0; j < d; ++j) (void)checked_pow(spec.base(j), level);

  Level prev{BoxSet(bases, std::vector<int>(d, 0), std::vector<std::int64_t>(d, 0)), {0}, 1};

  // Digit pairs (c, c') whose copies can touch, with the offset c' - c.
  struct Neighbor {
    std::uint32_t a, b;
    std::array<int, kMaxDim> offset;
  };
  std::vector<Neighbor> pairs;
  for (std::uint32_t a = 0; a < N; ++a) {
    for (std::uint32_t b = a + 1; b < N; ++b) {
      Neighbor nb{a, b, {}};
      bool near = true;
      for (int j = 0; j < d && near; ++j) {
        nb.offset[j] = spec.digit(b)[j] - spec.digit(a)[j];
        near = nb.offset[j] >= -1 && nb.offset[j] <= 1;
      }
      if (near) pairs.push_back(nb);
    }
  }

  for (int k = 1; k <= level; ++k) {
    const std::size_t M = prev.boxes.size();
    std::vector<std::int64_t> side(d);
    for (int j = 0; j < d; ++j) side[j] = checked_pow(spec.base(j), k - 1);

    // Boxes of the previous level on each face, per axis: [axis][0] at corner 0, [axis][1] at side - 1.
    std::vector<std::array<std::vector<std::uint32_t>, 2>> faces(d);
    for (std::uint32_t i = 0; i < M; ++i) {
      const auto c = prev.boxes.corner(i);
      for (int j = 0; j < d; ++j) {
        if (c[j] == 0) faces[j][0].push_back(i);
        if (c[j] == side[j] - 1) faces[j][1].push_back(i);
      }
    }

    UnionFind uf(N * prev.count);
    std::int64_t probe[kMaxDim];
    for (const Neighbor& nb : pairs) {
      int lead = -1;
      int free_axes = 0;
      for (int j = 0; j < d; ++j) {
        if (nb.offset[j] != 0 && lead < 0) lead = j;
        if (nb.offset[j] == 0) ++free_axes;
      }
      int choices = 1;
      for (int t = 0; t < free_axes; ++t) choices *= 3;
      // Boxes of copy a on the face towards copy b.
      const auto& candidates = faces[lead][nb.offset[lead] > 0 ? 1 : 0];
      for (std::uint32_t i : candidates) {
        const auto c = prev.boxes.corner(i);
        bool on_faces = true;
        for (int j = 0; j < d && on_faces; ++j) {
          if (nb.offset[j] > 0) on_faces = c[j] == side[j] - 1;
          if (nb.offset[j] < 0) on_faces = c[j] == 0;
        }
        if (!on_faces) continue;
        for (int code = 0; code < choices; ++code) {
          int rest = code;
          bool valid = true;
          for (int j = 0; j < d; ++j) {
            if (nb.offset[j] > 0) {
              probe[j] = 0;
            } else if (nb.offset[j] < 0) {
              probe[j] = side[j] - 1;
            } else {
              probe[j] = c[j] + rest % 3 - 1;
              rest /= 3;
              valid = valid && probe[j] >= 0 && probe[j] < side[j];
            }
          }
          if (!valid) continue;
          const std::size_t hit = prev.boxes.find(std::span<const std::int64_t>(probe, d));
          if (hit == M) continue;
          uf.unite(static_cast<std::uint32_t>(nb.a * prev.count + prev.labels[i]),
                   static_cast<std::uint32_t>(nb.b * prev.count + prev.labels[hit]));
        }
      }
    }

    // Assemble level k in copy order, then sort.
    std::vector<std::int64_t> flat(N * M * d);
    std::vector<std::uint32_t> raw(N * M);
    for (std::size_t c = 0; c < N; ++c) {
      const auto digit = spec.digit(c);
      for (std::size_t i = 0; i < M; ++i) {
        const auto corner = prev.boxes.corner(i);
        std::int64_t* dst = flat.data() + (c * M + i) * d;
        for (int j = 0; j < d; ++j) dst[j] = digit[j] * side[j] + corner[j];
        raw[c * M + i] = uf.find(static_cast<std::uint32_t>(c * prev.count + prev.labels[i]));
      }
    }
    std::vector<std::uint32_t> order(N * M);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
      const std::int64_t* a = flat.data() + static_cast<std::size_t>(x) * d;
      const std::int64_t* b = flat.data() + static_cast<std::size_t>(y) * d;
      return std::lexicographical_compare(a, a + d, b, b + d);
    });
    std::vector<std::int64_t> sorted(flat.size());
    std::vector<std::uint32_t> labels(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
      std::copy_n(flat.data() + static_cast<std::size_t>(order[r]) * d, d, sorted.data() + r * d);
      labels[r] = raw[order[r]];
    }
    Level next{BoxSet(bases, std::vector<int>(d, k), std::move(sorted)), std::move(labels), 0};
    next.count = detail::canonicalize_labels(next.labels);
    prev = std::move(next);
  }
  prev.boxes.level = level;
  return summarize_components(prev.boxes, std::move(prev.labels));
}

}  // namespace sponge
