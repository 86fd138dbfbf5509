#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sponge/deciders.hpp"
#include "sponge/gap_sequence.hpp"
#include "sponge/metrics.hpp"

namespace sponge {

enum class Property { MaximalPowerLaw, PerfectlyDisconnected };

std::string_view to_string(Property property);
/// Accepts "mpl" / "pd" and the full names.
Property parse_property(std::string_view text);

struct Caps {
  int island_cap = 4;
  int xi_cap = 3;
  int corroboration_kmax = 4;
  int gap_kmax = 2;
};

/// One required sub-verdict: the attractor itself (`projection == d`) or a major projection.
struct Conjunct {
  int projection = 0;
  Decision decision;
};

/// Advisory numbers attached to a classification; they never change the verdict.
struct Corroboration {
  double dimension = 0;
  std::optional<ExponentEstimate> exponent;
  std::vector<double> spread_lo;  // lower spread ratio at delta = n_d^-k, k = 1..
  std::vector<double> spread_hi;
  std::string note;
};

struct Classification {
  Property property = Property::MaximalPowerLaw;
  Verdict verdict;
  Reduction reduction;
  std::vector<Conjunct> evidence;
  Corroboration corroboration;
};

Classification classify_maximal_power_law(const SpongeSpec& spec, const Caps& caps = {}, const Limits& limits = {});
Classification classify_perfectly_disconnected(const SpongeSpec& spec, const Caps& caps = {},
                                               const Limits& limits = {});
Classification classify(const SpongeSpec& spec, Property property, const Caps& caps = {}, const Limits& limits = {});

enum class Conclusion { DistinguishedNotLipschitz, NotDistinguished };

std::string_view to_string(Conclusion conclusion);

struct RatioWindow {
  std::size_t indices = 0;  // resolved indices compared
  double min_ratio = 0;
  double max_ratio = 0;
};

struct ComparisonReport {
  std::vector<Classification> first;   // MaximalPowerLaw, PerfectlyDisconnected
  std::vector<Classification> second;
  GapSequence first_gaps;
  GapSequence second_gaps;
  RatioWindow window;
  Conclusion conclusion = Conclusion::NotDistinguished;
  std::vector<std::string> reasons;  // properties with mismatched definite verdicts
};

ComparisonReport compare(const SpongeSpec& a, const SpongeSpec& b, const Caps& caps = {}, const Limits& limits = {});

}  // namespace sponge
