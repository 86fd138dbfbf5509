#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sponge/geometry.hpp"

namespace sponge {

enum class Answer { Yes, No, Unknown };

std::string_view to_string(Answer answer);

/// A level-p island: a component of E_p disjoint from the boundary of [0,1]^d.
struct IslandAtLevel {
  int level = 0;
  BoxSet boxes;
};

/// The listed 1-based axes carry the full digit product, so the attractor
/// restricted to them is a full cube.
struct FullProjectionInterval {
  std::vector<int> axes;
};

/// Every component of Xi_k meeting [0,1]^d stays inside (-1,2)^d.
struct XiLevel {
  int level = 0;
};

/// Digits contain the full line along `axis` (1-based) with the remaining
/// coordinates fixed to `others` (listed in axis order, `axis` omitted).
struct LineSegmentWitness {
  int axis = 0;
  std::vector<int> others;
};

struct DepthExhausted {
  int cap = 0;
};

/// The decision procedure does not apply to this input.
struct OutOfTheoremScope {
  std::string reason;
};

using Certificate =
    std::variant<IslandAtLevel, FullProjectionInterval, XiLevel, LineSegmentWitness, DepthExhausted, OutOfTheoremScope>;

std::string_view certificate_kind(const Certificate& certificate);

struct Verdict {
  Answer answer = Answer::Unknown;
  Certificate certificate = DepthExhausted{};
};

/// A verdict together with the spec its certificate refers to. `kept_axes`
/// maps the subject's axes back to the 1-based axes of the input.
struct Decision {
  Verdict verdict;
  SpongeSpec subject;
  std::vector<int> kept_axes;
};

/// Searches levels 1..cap for an island, after removing degenerate axes.
Decision has_trivial_points(const SpongeSpec& spec, int cap, const Limits& limits = {});

/// Xi_k test for k = 1..cap, with full-product and full-line No certificates.
Decision is_totally_disconnected(const SpongeSpec& spec, int cap, const Limits& limits = {});

/// The 3^d translates of pillars(spec, k) by {-1,0,1}^d, sorted.
BoxSet xi_boxes(const SpongeSpec& spec, int level, const Limits& limits = {});

/// 3^d N^{k0}.
std::uint64_t finite_type_bound(const SpongeSpec& spec, int k0);
/// Throws InvalidCertificate unless the verdict is Yes(XiLevel).
std::uint64_t finite_type_bound(const SpongeSpec& spec, const Verdict& verdict);

struct VerifyResult {
  bool ok = false;
  std::string message;
};

/// Re-checks a certificate against `subject` without using the component
/// engines that produced it.
VerifyResult verify_certificate(const SpongeSpec& subject, const Verdict& verdict, const Limits& limits = {});

}  // namespace sponge
