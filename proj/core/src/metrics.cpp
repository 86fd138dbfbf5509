#include "sponge/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "sponge/error.hpp"

namespace sponge {

HBracket h_bracket(const SpongeSpec& spec, const Rational& delta, int depth, const Limits& limits) {
  if (delta <= 0) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  const auto ells = ell_all(spec, depth);
  if (box_diameter2(spec.bases(), ells) > delta * delta) {
    throw Error(ErrorCode::DepthTooShallow,
                "box diameter at depth " + std::to_string(depth) + " exceeds delta " + to_string(delta));
  }
  // Every pair of points of [0,1]^d is within sqrt(d).
  if (delta * delta >= spec.dim()) return {delta, 1, 1, depth};
  const Cover cover = build_cover(spec, depth, {}, limits);
  const DeltaPartition part = delta_partition(spec, cover, delta, limits);
  return {delta, part.lower_count, part.upper_count, depth};
}

int default_extra_depth(const SpongeSpec& spec, int k) {
  const Rational target(BigInt(1), big_pow(spec.top_base(), 2 * k));
  for (int t = 0;; ++t) {
    if (box_diameter2(spec.bases(), ell_all(spec, k + t)) <= target) return t;
  }
}

HProfile h_profile(const SpongeSpec& spec, int k_max, std::optional<int> extra_depth, const Limits& limits) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be at least 1");
  if (extra_depth && *extra_depth < 0) throw Error(ErrorCode::InvalidArgument, "negative extra depth");
  HProfile out;
  out.top_base = spec.top_base();
  for (int k = 1; k <= k_max; ++k) {
    const int t = extra_depth ? *extra_depth : default_extra_depth(spec, k);
    const Rational delta(BigInt(1), big_pow(spec.top_base(), k));
    out.rows.push_back({k, h_bracket(spec, delta, k + t, limits)});
  }
  return out;
}

ExponentEstimate estimate_exponent(const HProfile& profile) {
  const std::size_t n = profile.rows.size();
  if (n < 3) throw Error(ErrorCode::ProfileTooShort, "exponent estimate needs at least three profile rows");
  std::vector<double> x(n), y(n);
  ExponentEstimate out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = profile.rows[i];
    if (row.bracket.lo < 1) throw Error(ErrorCode::ProfileTooShort, "profile row with empty bracket");
    x[i] = row.k * std::log(static_cast<double>(profile.top_base));
    y[i] = std::log((static_cast<double>(row.bracket.lo) + static_cast<double>(row.bracket.hi)) / 2.0);
    if (row.bracket.hi > 2 * row.bracket.lo) out.low_confidence = true;
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  out.slope = sxx > 0 ? sxy / sxx : 0.0;
  out.intercept = my - out.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    out.residual = std::max(out.residual, std::abs(out.intercept + out.slope * x[i] - y[i]));
  }
  return out;
}

void write_profile_csv(std::ostream& out, const HProfile& profile) {
  out << "k,delta_num,delta_den,lo,hi,depth,exact\n";
  for (const auto& row : profile.rows) {
    const auto& b = row.bracket;
    out << row.k << ',' << numerator(b.delta) << ',' << denominator(b.delta) << ',' << b.lo << ',' << b.hi << ','
        << b.depth << ',' << (b.exact() ? "true" : "false") << '\n';
  }
}

SpreadStat spread_statistic(const SpongeSpec& spec, const Rational& delta, int depth, const Limits& limits) {
  if (delta <= 0) throw Error(ErrorCode::InvalidArgument, "delta must be positive");
  const Cover cover = build_cover(spec, depth, {}, limits);
  const DeltaPartition part = delta_partition(spec, cover, delta, limits);
  const BoxSet& boxes = cover.boxes;
  const int d = spec.dim();
  const std::size_t B = boxes.size();
  const Rational delta2 = delta * delta;

  // Upper bound: bounding hull of each lower component.
  std::vector<Corner> lo_min(part.lower_count), lo_max(part.lower_count);
  std::vector<std::uint8_t> lo_seen(part.lower_count, 0);
  for (std::size_t i = 0; i < B; ++i) {
    const auto c = boxes.corner(i);
    const auto l = part.lower[i];
    for (int j = 0; j < d; ++j) {
      if (!lo_seen[l] || c[j] < lo_min[l][j]) lo_min[l][j] = c[j];
      if (!lo_seen[l] || c[j] > lo_max[l][j]) lo_max[l][j] = c[j];
    }
    lo_seen[l] = 1;
  }
  const AxisScale bscale = box_scale(boxes);
  Rational hull_best = 0;
  std::int64_t ext[kMaxDim];
  for (std::size_t l = 0; l < part.lower_count; ++l) {
    for (int j = 0; j < d; ++j) ext[j] = lo_max[l][j] - lo_min[l][j] + 1;
    Rational v = bscale.value(std::span<const std::int64_t>(ext, d));
    if (v > hull_best) hull_best = std::move(v);
  }

  // Lower bound: for each upper component, the witnesses extreme along each
  // axis and each diagonal direction are attractor points of that component.
  std::vector<std::array<int, kMaxDim>> dirs;
  for (int j = 0; j < d; ++j) {
    std::array<int, kMaxDim> e{};
    e[j] = 1;
    dirs.push_back(e);
  }
  if (d > 1) {
    for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
      std::array<int, kMaxDim> e{};
      e[0] = 1;
      for (int j = 1; j < d; ++j) e[j] = (mask >> (j - 1)) & 1 ? -1 : 1;
      dirs.push_back(e);
    }
  }
  const std::size_t D = dirs.size();
  std::vector<double> inv_unit(d);
  for (int j = 0; j < d; ++j) inv_unit[j] = 1.0 / (std::pow(static_cast<double>(spec.base(j)), cover.word_length) * (spec.base(j) - 1));
  struct Extreme {
    Corner lo{}, hi{};
    double lo_v = 0, hi_v = 0;
  };
  std::vector<Extreme> ext_of(part.upper_count * D);
  std::vector<std::uint8_t> seen(part.upper_count, 0);
  std::int64_t w[kMaxDim];
  for (std::size_t i = 0; i < B; ++i) {
    const std::size_t u = part.upper[i];
    for (std::uint32_t p = cover.pillar_begin[i]; p < cover.pillar_begin[i + 1]; ++p) {
      for (std::size_t f = 0; f < cover.fixed_points.size(); ++f) {
        witness_point(spec, cover, p, f, w);
        for (std::size_t t = 0; t < D; ++t) {
          double v = 0;
          for (int j = 0; j < d; ++j) v += dirs[t][j] * (w[j] * inv_unit[j]);
          Extreme& e = ext_of[u * D + t];
          if (!seen[u] || v < e.lo_v) {
            e.lo_v = v;
            std::copy_n(w, d, e.lo.begin());
          }
          if (!seen[u] || v > e.hi_v) {
            e.hi_v = v;
            std::copy_n(w, d, e.hi.begin());
          }
        }
        seen[u] = 1;
      }
    }
  }
  const AxisScale wscale = witness_scale(spec, cover);
  Rational pair_best = -1;
  std::size_t best_component = 0;
  std::int64_t diff[kMaxDim];
  for (std::size_t u = 0; u < part.upper_count; ++u) {
    for (std::size_t t = 0; t < D; ++t) {
      const auto& e = ext_of[u * D + t];
      for (int j = 0; j < d; ++j) diff[j] = e.hi[j] - e.lo[j];
      Rational v = wscale.value(std::span<const std::int64_t>(diff, d));
      if (v > pair_best) {
        pair_best = std::move(v);
        best_component = u;
      }
    }
  }

  SpreadStat out;
  out.delta = delta;
  out.depth = depth;
  out.ratio2_lo = pair_best / delta2;
  out.ratio2_hi = hull_best / delta2;
  out.witness = BoxSet(std::vector<int>(spec.bases().begin(), spec.bases().end()),
                       std::vector<int>(boxes.exponents().begin(), boxes.exponents().end()));
  for (std::size_t i = 0; i < B; ++i) {
    if (part.upper[i] == best_component) out.witness.push_back(boxes.corner(i));
  }
  out.witness.level = depth;
  out.chain_size = out.ratio_lo();
  return out;
}

}  // namespace sponge
