#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "sponge/geometry.hpp"

namespace sponge {

/// One discontinuity of h_E. `delta2_lo == delta2_hi` for an exactly located
/// breakpoint; otherwise the breakpoints lie somewhere in the (squared) range
/// and their total multiplicity is known.
struct GapEntry {
  Rational delta2_lo;
  Rational delta2_hi;
  std::size_t multiplicity = 0;
  std::size_t h_at = 0;  // h_E at the breakpoint
  bool resolved = true;
};

/// h_E is bracketed on each interval [delta2_lo, delta2_hi) of squared delta.
struct GapSample {
  Rational delta2_lo;
  Rational delta2_hi;
  std::size_t lo = 0;
  std::size_t hi = 0;
};

struct GapSequence {
  std::vector<GapEntry> entries;  // strictly decreasing delta
  std::vector<GapSample> samples; // decreasing delta, down to floor2
  Rational floor2;
  int depth = 0;

  /// Squared g_i (i >= 1) when it falls on a resolved entry.
  std::optional<Rational> g2(std::size_t i) const;
  /// Number of leading indices whose g_i is resolved.
  std::size_t resolved_length() const;
  /// 1 + sum of multiplicities of entries above delta.
  std::optional<std::size_t> reconstructed_h(const Rational& delta2) const;
};

/// Breakpoints of h_E down to delta = n_d^-(k_max + 1).
GapSequence gap_sequence(const SpongeSpec& spec, int k_max, const Limits& limits = {});

/// Columns index,delta_lo,delta_hi,multiplicity.
void write_gap_csv(std::ostream& out, const GapSequence& seq);

/// Decimal rendering of sqrt(squared) with 17 significant digits.
std::string format_sqrt(const Rational& squared);

}  // namespace sponge
