#include "sponge/components.hpp"

#include <algorithm>
#include <ostream>

#include "internal.hpp"
#include "sponge/error.hpp"
#include "sponge/spatial_grid.hpp"
#include "sponge/union_find.hpp"

namespace sponge {

namespace detail {

std::size_t canonicalize_labels(std::vector<std::uint32_t>& labels) {
  std::uint32_t top = 0;
  for (auto l : labels) top = std::max(top, l);
  std::vector<std::uint32_t> id(labels.empty() ? 0 : static_cast<std::size_t>(top) + 1, UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& l : labels) {
    if (id[l] == UINT32_MAX) id[l] = next++;
    l = id[l];
  }
  return next;
}

}  // namespace detail

ComponentSummary summarize_components(const BoxSet& boxes, std::vector<std::uint32_t> labels) {
  ComponentSummary out;
  out.level = boxes.level;
  out.box_count = boxes.size();
  out.component_count = detail::canonicalize_labels(labels);
  out.sizes.assign(out.component_count, 0);
  out.touches_boundary.assign(out.component_count, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ++out.sizes[labels[i]];
    if (boxes.touches_unit_boundary(i)) out.touches_boundary[labels[i]] = 1;
  }
  out.island_count = static_cast<std::size_t>(std::count(out.touches_boundary.begin(), out.touches_boundary.end(), 0));
  out.max_size = out.sizes.empty() ? 0 : *std::max_element(out.sizes.begin(), out.sizes.end());
  out.component_of = std::move(labels);
  return out;
}

ComponentSummary components(const BoxSet& boxes, const Limits& limits) {
  check_budget(boxes.size(), limits, "component analysis");
  const std::size_t B = boxes.size();
  const std::vector<std::int64_t> unit(boxes.dim(), 1);
  const SpatialGrid grid(boxes, unit);
  const unsigned chunks = chunk_count(grid.cell_count(), limits.threads);
  std::vector<UnionFind> parts(chunks, UnionFind(0));
  parallel_chunks(grid.cell_count(), limits.threads, [&](std::size_t begin, std::size_t end, unsigned chunk) {
    UnionFind uf(B);
    for (std::size_t c = begin; c < end; ++c) {
      const auto own = grid.members(c);
      for (std::uint32_t other : grid.neighbors(c)) {
        if (other < c) continue;
        const auto theirs = grid.members(other);
        for (std::size_t x = 0; x < own.size(); ++x) {
          for (std::size_t y = (other == c ? x + 1 : 0); y < theirs.size(); ++y) uf.unite(own[x], theirs[y]);
        }
      }
    }
    parts[chunk] = std::move(uf);
  });
  UnionFind uf(B);
  for (auto& part : parts) {
    for (std::uint32_t i = 0; i < B; ++i) uf.unite(i, part.find(i));
  }
  return summarize_components(boxes, uf.labels());
}

ComponentSummary components_brute_force(const BoxSet& boxes, const Limits& limits) {
  const std::uint64_t B = boxes.size();
  check_budget(saturating_mul(B, B > 0 ? B - 1 : 0) / 2, limits, "all-pairs component analysis");
  const int d = boxes.dim();
  UnionFind uf(B);
  for (std::size_t a = 0; a < B; ++a) {
    const auto ca = boxes.corner(a);
    for (std::size_t b = a + 1; b < B; ++b) {
      const auto cb = boxes.corner(b);
      bool touch = true;
      for (int j = 0; j < d && touch; ++j) touch = ca[j] - cb[j] <= 1 && cb[j] - ca[j] <= 1;
      if (touch) uf.unite(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
  }
  return summarize_components(boxes, uf.labels());
}

IslandReport islands(const SpongeSpec& spec, int level, const Limits& limits) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "island search needs level >= 1");
  const BoxSet boxes = pillars(spec, level, limits);
  const ComponentSummary summary = components(boxes, limits);
  IslandReport out;
  out.level = level;
  out.island_count = summary.island_count;
  for (std::uint32_t c = 0; c < summary.component_count; ++c) {
    if (summary.touches_boundary[c]) continue;
    BoxSet witness(std::vector<int>(spec.bases().begin(), spec.bases().end()),
                   std::vector<int>(spec.dim(), level));
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (summary.component_of[i] == c) witness.push_back(boxes.corner(i));
    }
    witness.level = level;
    out.witness = std::move(witness);
    break;
  }
  return out;
}

std::size_t max_pillars_per_component(const SpongeSpec& spec, int level, const Limits& limits) {
  return components(pillars(spec, level, limits), limits).max_size;
}

namespace {

// Integer floor(delta * unit), clamped to fit comparisons against int64 distances.
std::int64_t scaled_floor(const Rational& delta, const BigInt& unit) {
  const Rational v = delta * Rational(unit);
  const BigInt fl = numerator(v) / denominator(v);
  static const BigInt cap = BigInt(INT64_MAX);
  return fl > cap ? INT64_MAX : static_cast<std::int64_t>(fl);
}

}  // namespace

BoundaryInnerCount boundary_inner_split(const SpongeSpec& spec, const Word& w, const Rational& delta, int depth,
                                        const Limits& limits) {
  const int d = spec.dim();
  const int len = static_cast<int>(w.size());
  for (int j = 0; j < d; ++j) {
    if (delta >= Rational(BigInt(1), big_pow(spec.base(j), len))) {
      throw Error(ErrorCode::InvalidArgument, "delta must be smaller than every side of the cylinder pillar");
    }
  }
  const Cover cover = build_cover(spec, depth, w, limits);
  const DeltaPartition part = delta_partition(spec, cover, delta, limits);
  const ExactBox root = pillar_of(spec, w);
  const BoxSet& boxes = cover.boxes;
  const std::size_t B = boxes.size();

  // Face positions of the cylinder pillar in box units and in witness units.
  std::vector<std::int64_t> box_lo(d), box_hi(d), box_reach(d), wit_lo(d), wit_hi(d), wit_reach(d);
  for (int j = 0; j < d; ++j) {
    const int n = spec.base(j);
    const std::int64_t box_scale_j = checked_pow(n, boxes.exponents()[j] - len);
    box_lo[j] = root.corner[j] * box_scale_j;
    box_hi[j] = (root.corner[j] + 1) * box_scale_j;
    box_reach[j] = scaled_floor(delta, BigInt(boxes.resolution()[j]));
    const std::int64_t wit_scale_j = checked_mul(checked_pow(n, cover.word_length - len), n - 1);
    wit_lo[j] = root.corner[j] * wit_scale_j;
    wit_hi[j] = (root.corner[j] + 1) * wit_scale_j;
    wit_reach[j] = scaled_floor(delta, big_pow(n, cover.word_length) * (n - 1));
  }

  std::vector<std::uint8_t> possibly(B, 0), surely(B, 0);
  std::int64_t x[kMaxDim];
  for (std::size_t i = 0; i < B; ++i) {
    const auto c = boxes.corner(i);
    for (int j = 0; j < d && !possibly[i]; ++j) {
      possibly[i] = (c[j] - box_lo[j] <= box_reach[j]) || (box_hi[j] - (c[j] + 1) <= box_reach[j]);
    }
    if (!possibly[i]) continue;
    for (std::uint32_t p = cover.pillar_begin[i]; p < cover.pillar_begin[i + 1] && !surely[i]; ++p) {
      for (std::size_t f = 0; f < cover.fixed_points.size() && !surely[i]; ++f) {
        witness_point(spec, cover, p, f, x);
        for (int j = 0; j < d; ++j) {
          if (x[j] - wit_lo[j] <= wit_reach[j] || wit_hi[j] - x[j] <= wit_reach[j]) {
            surely[i] = 1;
            break;
          }
        }
      }
    }
  }

  std::vector<std::uint8_t> lower_surely(part.lower_count, 0), lower_possibly(part.lower_count, 0);
  std::vector<std::uint8_t> upper_surely(part.upper_count, 0), upper_possibly(part.upper_count, 0);
  for (std::size_t i = 0; i < B; ++i) {
    lower_surely[part.lower[i]] |= surely[i];
    lower_possibly[part.lower[i]] |= possibly[i];
    upper_surely[part.upper[i]] |= surely[i];
    upper_possibly[part.upper[i]] |= possibly[i];
  }
  auto count = [](const std::vector<std::uint8_t>& v, std::uint8_t value) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), value));
  };

  BoundaryInnerCount out;
  out.delta = delta;
  out.depth = depth;
  out.total = {part.lower_count, part.upper_count};
  out.boundary = {count(lower_surely, 1), count(upper_possibly, 1)};
  out.inner = {count(lower_possibly, 0), count(upper_surely, 0)};
  return out;
}

void write_component_csv(std::ostream& out, const ComponentSummary& summary) {
  out << "component,boxes,boundary\n";
  for (std::size_t c = 0; c < summary.component_count; ++c) {
    out << c << ',' << summary.sizes[c] << ',' << (summary.touches_boundary[c] ? 1 : 0) << '\n';
  }
}

}  // namespace sponge
