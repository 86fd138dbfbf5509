#include "sponge/classify.hpp"

#include <algorithm>
#include <cmath>

#include "sponge/error.hpp"

namespace sponge {

std::string_view to_string(Property property) {
  return property == Property::MaximalPowerLaw ? "MaximalPowerLaw" : "PerfectlyDisconnected";
}

Property parse_property(std::string_view text) {
  if (text == "mpl" || text == "MaximalPowerLaw") return Property::MaximalPowerLaw;
  if (text == "pd" || text == "PerfectlyDisconnected") return Property::PerfectlyDisconnected;
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + std::string(text) + "' (expected mpl or pd)");
}

std::string_view to_string(Conclusion conclusion) {
  return conclusion == Conclusion::DistinguishedNotLipschitz ? "DistinguishedNotLipschitz" : "NotDistinguished";
}

namespace {

Verdict combine(const std::vector<Conjunct>& evidence) {
  bool all_yes = true;
  for (const auto& c : evidence) {
    if (c.decision.verdict.answer == Answer::No) return c.decision.verdict;
    if (c.decision.verdict.answer != Answer::Yes) all_yes = false;
  }
  if (all_yes && !evidence.empty()) return evidence.back().decision.verdict;
  for (const auto& c : evidence) {
    if (c.decision.verdict.answer == Answer::Unknown) return c.decision.verdict;
  }
  return {};
}

void corroborate_exponent(const SpongeSpec& spec, const Caps& caps, const Limits& limits, Corroboration& out) {
  try {
    const HProfile profile = h_profile(spec, caps.corroboration_kmax, std::nullopt, limits);
    out.exponent = estimate_exponent(profile);
  } catch (const Error& e) {
    out.note = std::string("exponent estimate unavailable: ") + e.what();
  }
}

void corroborate_spread(const SpongeSpec& spec, const Caps& caps, const Limits& limits, Corroboration& out) {
  try {
    for (int k = 1; k <= caps.corroboration_kmax; ++k) {
      const Rational delta(BigInt(1), big_pow(spec.top_base(), k));
      const SpreadStat s = spread_statistic(spec, delta, k + default_extra_depth(spec, k), limits);
      out.spread_lo.push_back(s.ratio_lo());
      out.spread_hi.push_back(s.ratio_hi());
    }
  } catch (const Error& e) {
    out.note = std::string("spread trend truncated: ") + e.what();
  }
}

Classification run(const SpongeSpec& spec, Property property, const Caps& caps, const Limits& limits) {
  Classification out{property, Verdict{}, reduce_degenerate(spec), {}, {}};
  const SpongeSpec& reduced = out.reduction.spec;
  out.corroboration.dimension = box_dimension(reduced).value;
  if (reduced.kind() == SpongeKind::Mixed) {
    out.verdict = {Answer::Unknown,
                   OutOfTheoremScope{"bases are neither all equal nor strictly increasing; the characterization "
                                     "theorems cover fractal cubes and strict sponges only"}};
    return out;
  }
  const int d = reduced.dim();
  const int first = reduced.kind() == SpongeKind::Cube ? d : 1;
  for (int j = first; j <= d; ++j) {
    const SpongeSpec target = project(reduced, j);
    out.evidence.push_back({j, property == Property::MaximalPowerLaw
                                   ? has_trivial_points(target, caps.island_cap, limits)
                                   : is_totally_disconnected(target, caps.xi_cap, limits)});
  }
  out.verdict = combine(out.evidence);
  if (property == Property::MaximalPowerLaw) {
    corroborate_exponent(reduced, caps, limits, out.corroboration);
  } else {
    corroborate_spread(reduced, caps, limits, out.corroboration);
  }
  return out;
}

}  // namespace

Classification classify(const SpongeSpec& spec, Property property, const Caps& caps, const Limits& limits) {
  return run(spec, property, caps, limits);
}

Classification classify_maximal_power_law(const SpongeSpec& spec, const Caps& caps, const Limits& limits) {
  return run(spec, Property::MaximalPowerLaw, caps, limits);
}

Classification classify_perfectly_disconnected(const SpongeSpec& spec, const Caps& caps, const Limits& limits) {
  return run(spec, Property::PerfectlyDisconnected, caps, limits);
}

ComparisonReport compare(const SpongeSpec& a, const SpongeSpec& b, const Caps& caps, const Limits& limits) {
  ComparisonReport out;
  for (Property p : {Property::MaximalPowerLaw, Property::PerfectlyDisconnected}) {
    out.first.push_back(classify(a, p, caps, limits));
    out.second.push_back(classify(b, p, caps, limits));
    const Answer x = out.first.back().verdict.answer;
    const Answer y = out.second.back().verdict.answer;
    if (x != Answer::Unknown && y != Answer::Unknown && x != y) out.reasons.emplace_back(to_string(p));
  }
  out.conclusion = out.reasons.empty() ? Conclusion::NotDistinguished : Conclusion::DistinguishedNotLipschitz;

  out.first_gaps = gap_sequence(a, caps.gap_kmax, limits);
  out.second_gaps = gap_sequence(b, caps.gap_kmax, limits);
  const std::size_t n = std::min(out.first_gaps.resolved_length(), out.second_gaps.resolved_length());
  for (std::size_t i = 1; i <= n; ++i) {
    const double r = std::sqrt(to_double(*out.first_gaps.g2(i) / *out.second_gaps.g2(i)));
    if (out.window.indices == 0) {
      out.window.min_ratio = out.window.max_ratio = r;
    } else {
      out.window.min_ratio = std::min(out.window.min_ratio, r);
      out.window.max_ratio = std::max(out.window.max_ratio, r);
    }
    ++out.window.indices;
  }
  return out;
}

}  // namespace sponge
