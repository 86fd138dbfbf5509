#include "sponge/deciders.hpp"

#include <algorithm>
#include <numeric>

#include "sponge/components.hpp"
#include "sponge/error.hpp"

namespace sponge {

std::string_view to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view certificate_kind(const Certificate& certificate) {
  struct Visitor {
    std::string_view operator()(const IslandAtLevel&) const { return "IslandAtLevel"; }
    std::string_view operator()(const FullProjectionInterval&) const { return "FullProjectionInterval"; }
    std::string_view operator()(const XiLevel&) const { return "XiLevel"; }
    std::string_view operator()(const LineSegmentWitness&) const { return "LineSegmentWitness"; }
    std::string_view operator()(const DepthExhausted&) const { return "DepthExhausted"; }
    std::string_view operator()(const OutOfTheoremScope&) const { return "OutOfTheoremScope"; }
  };
  return std::visit(Visitor{}, certificate);
}

namespace {

std::vector<int> all_axes(int d) {
  std::vector<int> axes(d);
  std::iota(axes.begin(), axes.end(), 1);
  return axes;
}

bool find_full_line(const SpongeSpec& spec, LineSegmentWitness& out) {
  const int d = spec.dim();
  std::vector<int> probe(d);
  for (int axis = 0; axis < d; ++axis) {
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const auto digit = spec.digit(i);
      if (digit[axis] != 0) continue;
      std::copy(digit.begin(), digit.end(), probe.begin());
      bool full = true;
      for (int t = 1; t < spec.base(axis) && full; ++t) {
        probe[axis] = t;
        full = spec.contains(probe);
      }
      if (!full) continue;
      out.axis = axis + 1;
      out.others.clear();
      for (int j = 0; j < d; ++j) {
        if (j != axis) out.others.push_back(digit[j]);
      }
      return true;
    }
  }
  return false;
}

}  // namespace

Decision has_trivial_points(const SpongeSpec& spec, int cap, const Limits& limits) {
  if (cap < 0) throw Error(ErrorCode::InvalidArgument, "negative cap");
  Reduction red = reduce_degenerate(spec);
  Decision out{Verdict{}, red.spec, red.kept_axes};
  const SpongeSpec& subject = out.subject;
  if (is_full_product(subject)) {
    out.verdict = {Answer::No, FullProjectionInterval{all_axes(subject.dim())}};
    return out;
  }
  for (int p = 1; p <= cap; ++p) {
    IslandReport report = islands(subject, p, limits);
    if (report.witness) {
      out.verdict = {Answer::Yes, IslandAtLevel{p, std::move(*report.witness)}};
      return out;
    }
  }
  out.verdict = {Answer::Unknown, DepthExhausted{cap}};
  return out;
}

BoxSet xi_boxes(const SpongeSpec& spec, int level, const Limits& limits) {
  const int d = spec.dim();
  std::uint64_t copies = 1;
  for (int j = 0; j < d; ++j) copies *= 3;
  check_budget(saturating_mul(copies, saturating_pow(spec.size(), level)), limits, "Xi construction");
  const BoxSet base = pillars(spec, level, limits);
  BoxSet out(std::vector<int>(spec.bases().begin(), spec.bases().end()), std::vector<int>(d, level));
  out.reserve(base.size() * copies);
  std::int64_t shifted[kMaxDim];
  for (std::uint64_t code = 0; code < copies; ++code) {
    std::uint64_t rest = code;
    std::int64_t offset[kMaxDim];
    for (int j = 0; j < d; ++j) {
      offset[j] = (static_cast<std::int64_t>(rest % 3) - 1) * base.resolution()[j];
      rest /= 3;
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
      const auto c = base.corner(i);
      for (int j = 0; j < d; ++j) shifted[j] = c[j] + offset[j];
      out.push_back(std::span<const std::int64_t>(shifted, d));
    }
  }
  out.sort_unique();
  out.level = level;
  return out;
}

namespace {

bool xi_confined(const SpongeSpec& spec, int level, const Limits& limits) {
  const BoxSet xi = xi_boxes(spec, level, limits);
  const ComponentSummary summary = components(xi, limits);
  const int d = spec.dim();
  std::vector<std::uint8_t> meets(summary.component_count, 0), outer(summary.component_count, 0);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const auto c = xi.corner(i);
    bool inside = true;
    bool edge = false;
    for (int j = 0; j < d; ++j) {
      const std::int64_t D = xi.resolution()[j];
      inside = inside && c[j] + 1 >= 0 && c[j] <= D;
      edge = edge || c[j] == -D || c[j] + 1 == 2 * D;
    }
    if (inside) meets[summary.component_of[i]] = 1;
    if (edge) outer[summary.component_of[i]] = 1;
  }
  for (std::size_t c = 0; c < summary.component_count; ++c) {
    if (meets[c] && outer[c]) return false;
  }
  return true;
}

}  // namespace

Decision is_totally_disconnected(const SpongeSpec& spec, int cap, const Limits& limits) {
  if (cap < 0) throw Error(ErrorCode::InvalidArgument, "negative cap");
  Decision out{Verdict{}, spec, all_axes(spec.dim())};
  if (is_full_product(spec)) {
    out.verdict = {Answer::No, FullProjectionInterval{all_axes(spec.dim())}};
    return out;
  }
  LineSegmentWitness line;
  if (find_full_line(spec, line)) {
    out.verdict = {Answer::No, line};
    return out;
  }
  for (int k = 1; k <= cap; ++k) {
    if (xi_confined(spec, k, limits)) {
      out.verdict = {Answer::Yes, XiLevel{k}};
      return out;
    }
  }
  out.verdict = {Answer::Unknown, DepthExhausted{cap}};
  return out;
}

std::uint64_t finite_type_bound(const SpongeSpec& spec, int k0) {
  if (k0 < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  std::int64_t out = checked_pow(3, spec.dim());
  return static_cast<std::uint64_t>(checked_mul(out, checked_pow(static_cast<std::int64_t>(spec.size()), k0)));
}

std::uint64_t finite_type_bound(const SpongeSpec& spec, const Verdict& verdict) {
  const auto* xi = std::get_if<XiLevel>(&verdict.certificate);
  if (verdict.answer != Answer::Yes || xi == nullptr) {
    throw Error(ErrorCode::InvalidCertificate, "finite-type bound needs a Yes verdict with an XiLevel certificate");
  }
  return finite_type_bound(spec, xi->level);
}

}  // namespace sponge
