#include "sponge/delta_graph.hpp"

#include <algorithm>

#include "internal.hpp"
#include "sponge/error.hpp"
#include "sponge/spatial_grid.hpp"
#include "sponge/union_find.hpp"

namespace sponge {

AxisScale box_scale(const BoxSet& boxes) {
  std::vector<BigInt> units;
  for (int j = 0; j < boxes.dim(); ++j) units.emplace_back(boxes.resolution()[j]);
  return AxisScale(std::move(units));
}

AxisScale witness_scale(const SpongeSpec& spec, const Cover& cover) {
  std::vector<BigInt> units;
  for (int j = 0; j < spec.dim(); ++j) units.push_back(big_pow(spec.base(j), cover.word_length) * (spec.base(j) - 1));
  return AxisScale(std::move(units));
}

void witness_point(const SpongeSpec& spec, const Cover& cover, std::size_t pillar, std::size_t f,
                   std::int64_t* out) {
  const auto corner = cover.pillar(pillar);
  for (int j = 0; j < spec.dim(); ++j) out[j] = corner[j] * (spec.base(j) - 1) + cover.fixed_points[f][j];
}

namespace {

template <typename Visit>
bool for_each_witness_pair(const SpongeSpec& spec, const Cover& cover, std::size_t a, std::size_t b, Visit&& visit) {
  const int d = spec.dim();
  const std::size_t F = cover.fixed_points.size();
  std::int64_t wa[kMaxDim];
  std::int64_t wb[kMaxDim];
  std::int64_t diff[kMaxDim];
  for (std::uint32_t p = cover.pillar_begin[a]; p < cover.pillar_begin[a + 1]; ++p) {
    for (std::size_t f = 0; f < F; ++f) {
      witness_point(spec, cover, p, f, wa);
      for (std::uint32_t q = cover.pillar_begin[b]; q < cover.pillar_begin[b + 1]; ++q) {
        for (std::size_t g = 0; g < F; ++g) {
          witness_point(spec, cover, q, g, wb);
          for (int j = 0; j < d; ++j) diff[j] = wb[j] - wa[j];
          if (visit(std::span<const std::int64_t>(diff, d))) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool witnesses_within(const SpongeSpec& spec, const Cover& cover, std::size_t a, std::size_t b,
                      const SquaredNormBound& bound) {
  return for_each_witness_pair(spec, cover, a, b, [&](std::span<const std::int64_t> diff) { return bound.within(diff); });
}

Rational min_witness_distance2(const SpongeSpec& spec, const Cover& cover, std::size_t a, std::size_t b,
                               const AxisScale& scale) {
  bool first = true;
  Rational best = 0;
  for_each_witness_pair(spec, cover, a, b, [&](std::span<const std::int64_t> diff) {
    Rational v = scale.value(diff);
    if (first || v < best) best = std::move(v);
    first = false;
    return false;
  });
  return best;
}

DeltaPartition delta_partition(const SpongeSpec& spec, const Cover& cover, const Rational& delta,
                               const Limits& limits) {
  if (delta <= 0) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  const BoxSet& boxes = cover.boxes;
  const Rational delta2 = delta * delta;
  if (box_diameter2(boxes.bases(), boxes.exponents()) > delta2) {
    throw Error(ErrorCode::DepthTooShallow,
                "box diameter at depth " + std::to_string(cover.depth) + " exceeds delta " + to_string(delta));
  }
  const int d = boxes.dim();
  const std::size_t B = boxes.size();

  std::vector<std::int64_t> reach(d);
  for (int j = 0; j < d; ++j) {
    const std::int64_t res = boxes.resolution()[j];
    const Rational scaled = delta * res;
    const BigInt fl = numerator(scaled) / denominator(scaled);
    reach[j] = fl >= res ? res : static_cast<std::int64_t>(fl) + 1;
  }

  const AxisScale bscale = box_scale(boxes);
  const SquaredNormBound gap_bound(bscale, delta2);
  const SquaredNormBound span_bound(bscale, delta2);
  const AxisScale wscale = witness_scale(spec, cover);
  const SquaredNormBound witness_bound(wscale, delta2);

  const SpatialGrid grid(boxes, reach);
  const unsigned chunks = chunk_count(grid.cell_count(), limits.threads);
  std::vector<UnionFind> lower_parts(chunks, UnionFind(0));
  std::vector<UnionFind> upper_parts(chunks, UnionFind(0));

  parallel_chunks(grid.cell_count(), limits.threads, [&](std::size_t begin, std::size_t end, unsigned chunk) {
    UnionFind lower(B);
    UnionFind upper(B);
    std::int64_t gap[kMaxDim];
    std::int64_t span[kMaxDim];
    for (std::size_t c = begin; c < end; ++c) {
      const auto near = grid.neighbors(c);
      const auto own = grid.members(c);
      for (std::uint32_t other : near) {
        if (other < c) continue;
        const auto theirs = grid.members(other);
        for (std::size_t x = 0; x < own.size(); ++x) {
          const std::uint32_t a = own[x];
          const auto ca = boxes.corner(a);
          for (std::size_t y = (other == c ? x + 1 : 0); y < theirs.size(); ++y) {
            const std::uint32_t b = theirs[y];
            const auto cb = boxes.corner(b);
            bool reachable = true;
            for (int j = 0; j < d; ++j) {
              const std::int64_t delta_j = cb[j] > ca[j] ? cb[j] - ca[j] : ca[j] - cb[j];
              if (delta_j > reach[j]) {
                reachable = false;
                break;
              }
              gap[j] = delta_j > 0 ? delta_j - 1 : 0;
              span[j] = delta_j + 1;
            }
            if (!reachable) continue;
            const bool lower_done = lower.same(a, b);
            const bool upper_done = upper.same(a, b);
            if (lower_done && upper_done) continue;
            if (!lower_done) {
              if (!gap_bound.within(std::span<const std::int64_t>(gap, d))) continue;
              lower.unite(a, b);
            } else if (!gap_bound.within(std::span<const std::int64_t>(gap, d))) {
              continue;
            }
            if (upper_done) continue;
            if (span_bound.within(std::span<const std::int64_t>(span, d)) ||
                witnesses_within(spec, cover, a, b, witness_bound)) {
              upper.unite(a, b);
            }
          }
        }
      }
    }
    lower_parts[chunk] = std::move(lower);
    upper_parts[chunk] = std::move(upper);
  });

  UnionFind lower(B);
  UnionFind upper(B);
  for (unsigned t = 0; t < chunks; ++t) {
    for (std::uint32_t i = 0; i < B; ++i) {
      lower.unite(i, lower_parts[t].find(i));
      upper.unite(i, upper_parts[t].find(i));
    }
  }

  DeltaPartition out;
  out.delta = delta;
  out.lower = lower.labels();
  out.upper = upper.labels();
  out.lower_count = B == 0 ? 0 : *std::max_element(out.lower.begin(), out.lower.end()) + 1;
  out.upper_count = B == 0 ? 0 : *std::max_element(out.upper.begin(), out.upper.end()) + 1;
  return out;
}

}  // namespace sponge
