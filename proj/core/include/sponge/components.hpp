#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sponge/delta_graph.hpp"
#include "sponge/geometry.hpp"

namespace sponge {

/// Connected components of the touching graph of a box set (closed boxes,
/// corner contact counts). Component ids follow first occurrence in box order.
struct ComponentSummary {
  int level = -1;
  std::size_t box_count = 0;
  std::size_t component_count = 0;
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;
  std::vector<std::uint8_t> touches_boundary;  // meets a face of [0,1]^d
  std::size_t island_count = 0;
  std::size_t max_size = 0;
};

/// Grid-accelerated component count.
ComponentSummary components(const BoxSet& boxes, const Limits& limits = {});
/// All-pairs union-find, O(B^2); refuses sets whose pair count exceeds the budget.
ComponentSummary components_brute_force(const BoxSet& boxes, const Limits& limits = {});
/// Components of pillars(spec, level), built level by level by gluing the N
/// first-letter copies of the previous level along shared faces. Box order
/// matches pillars(spec, level).
ComponentSummary components_hierarchical(const SpongeSpec& spec, int level, const Limits& limits = {});

/// Builds the summary fields from per-box labels (relabelled by first occurrence).
ComponentSummary summarize_components(const BoxSet& boxes, std::vector<std::uint32_t> labels);

struct IslandReport {
  int level = 0;
  std::size_t island_count = 0;
  std::optional<BoxSet> witness;  // boxes of the first island in box order
};

IslandReport islands(const SpongeSpec& spec, int level, const Limits& limits = {});

std::size_t max_pillars_per_component(const SpongeSpec& spec, int level, const Limits& limits = {});

struct CountBracket {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct BoundaryInnerCount {
  Rational delta;
  CountBracket boundary;
  CountBracket inner;
  CountBracket total;
  int depth = 0;
};

/// Splits the delta-components of the cylinder S_w(E) into those within delta
/// of the boundary of the pillar S_w([0,1]^d) and those farther away.
BoundaryInnerCount boundary_inner_split(const SpongeSpec& spec, const Word& w, const Rational& delta, int depth,
                                        const Limits& limits = {});

/// Columns component,boxes,boundary.
void write_component_csv(std::ostream& out, const ComponentSummary& summary);

}  // namespace sponge
