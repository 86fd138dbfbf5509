#pragma once

#include <cstdint>
#include <vector>

#include "sponge/geometry.hpp"

namespace sponge {

/// Two partitions of the boxes of a Cover at scale delta.
///
/// `lower` joins boxes whose closed gap is at most delta, so it can only
/// over-merge the delta-components of the attractor. `upper` joins boxes only
/// when two attractor points they contain are provably within delta, so it can
/// only under-merge. Each box's own points are mutually delta-close because
/// the box diameter is at most delta.
struct DeltaPartition {
  Rational delta;
  std::vector<std::uint32_t> lower;
  std::size_t lower_count = 0;
  std::vector<std::uint32_t> upper;
  std::size_t upper_count = 0;
};

/// Throws DepthTooShallow when the cover's boxes are wider than delta.
DeltaPartition delta_partition(const SpongeSpec& spec, const Cover& cover, const Rational& delta,
                               const Limits& limits = {});

/// Units n_j^{e_j}: integer corner differences of cover boxes.
AxisScale box_scale(const BoxSet& boxes);
/// Units n_j^L (n_j - 1): integer coordinates of witness points.
AxisScale witness_scale(const SpongeSpec& spec, const Cover& cover);

/// Coordinates (in witness_scale units) of the image of fixed point `f` under
/// the word of pillar `pillar`.
void witness_point(const SpongeSpec& spec, const Cover& cover, std::size_t pillar, std::size_t f,
                   std::int64_t* out);

/// True when some witness of box `a` and some witness of box `b` lie within `bound`.
bool witnesses_within(const SpongeSpec& spec, const Cover& cover, std::size_t a, std::size_t b,
                      const SquaredNormBound& bound);

/// Smallest squared distance between witnesses of the two boxes.
Rational min_witness_distance2(const SpongeSpec& spec, const Cover& cover, std::size_t a, std::size_t b,
                               const AxisScale& scale);

}  // namespace sponge
