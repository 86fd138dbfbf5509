#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "sponge/delta_graph.hpp"
#include "sponge/geometry.hpp"

namespace sponge {

/// lo <= h_E(delta) <= hi, from the approximate boxes at `depth`.
struct HBracket {
  Rational delta;
  std::size_t lo = 0;
  std::size_t hi = 0;
  int depth = 0;

  bool exact() const noexcept { return lo == hi; }
};

HBracket h_bracket(const SpongeSpec& spec, const Rational& delta, int depth, const Limits& limits = {});

/// Smallest t >= 0 such that approximate boxes at depth k + t have diameter at most n_d^-k.
int default_extra_depth(const SpongeSpec& spec, int k);

struct ProfileRow {
  int k = 0;
  HBracket bracket;  // delta = n_d^-k
};

struct HProfile {
  int top_base = 0;
  std::vector<ProfileRow> rows;
};

/// Brackets at delta = n_d^-k for k = 1..k_max, each at depth k + extra depth.
HProfile h_profile(const SpongeSpec& spec, int k_max, std::optional<int> extra_depth = std::nullopt,
                   const Limits& limits = {});

struct ExponentEstimate {
  double slope = 0;
  double intercept = 0;
  double residual = 0;
  bool low_confidence = false;  // some bracket has hi > 2 lo
};

/// Least squares of log(midpoint) against k log n_d. Needs at least three rows.
ExponentEstimate estimate_exponent(const HProfile& profile);

/// Columns k,delta_num,delta_den,lo,hi,depth,exact.
void write_profile_csv(std::ostream& out, const HProfile& profile);

/// Bracket for max over delta-components U of diam(U) / delta, kept squared.
struct SpreadStat {
  Rational delta;
  int depth = 0;
  Rational ratio2_lo;
  Rational ratio2_hi;
  BoxSet witness;           // boxes of the component attaining ratio2_lo
  double chain_size = 0;    // sqrt(ratio2_lo)

  double ratio_lo() const { return sqrt_to_double(ratio2_lo); }
  double ratio_hi() const { return sqrt_to_double(ratio2_hi); }
};

SpreadStat spread_statistic(const SpongeSpec& spec, const Rational& delta, int depth, const Limits& limits = {});

}  // namespace sponge
