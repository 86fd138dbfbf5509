#include "sponge/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sponge/error.hpp"
#include "sponge/rational.hpp"

namespace sponge {

std::string_view to_string(SpongeKind kind) {
  switch (kind) {
    case SpongeKind::Cube: return "cube";
    case SpongeKind::Sponge: return "sponge";
    case SpongeKind::Mixed: return "mixed";
  }
  return "mixed";
}

std::vector<std::vector<int>> SpongeSpec::digit_list() const {
  std::vector<std::vector<int>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto d = digit(i);
    out.emplace_back(d.begin(), d.end());
  }
  return out;
}

bool SpongeSpec::contains(std::span<const int> probe) const {
  if (static_cast<int>(probe.size()) != dim()) return false;
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto d = digit(mid);
    if (std::lexicographical_compare(d.begin(), d.end(), probe.begin(), probe.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < size() && std::equal(probe.begin(), probe.end(), digit(lo).begin());
}

SpongeSpec validate_spec(int dimension, std::vector<int> bases, const std::vector<std::vector<int>>& digits) {
  if (dimension < 1) {
    throw SpecError(ErrorCode::DimensionMismatch, "dimension must be at least 1", 0, dimension);
  }
  if (dimension > kMaxDim) {
    throw SpecError(ErrorCode::DimensionTooLarge,
                    "dimension " + std::to_string(dimension) + " exceeds " + std::to_string(kMaxDim), 0,
                    dimension);
  }
  if (static_cast<int>(bases.size()) != dimension) {
    throw SpecError(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(dimension) + " bases, got " + std::to_string(bases.size()));
  }
  for (int j = 0; j < dimension; ++j) {
    if (bases[j] < 2) {
      throw SpecError(ErrorCode::BaseTooSmall, "base on axis " + std::to_string(j + 1) + " is below 2", j + 1,
                      bases[j]);
    }
    if (j > 0 && bases[j] < bases[j - 1]) {
      throw SpecError(ErrorCode::BasesNotSorted, "bases must be non-decreasing", j + 1, bases[j]);
    }
  }
  if (digits.empty()) throw SpecError(ErrorCode::EmptyDigits, "digit set is empty");

  std::vector<std::vector<int>> rows;
  rows.reserve(digits.size());
  for (const auto& d : digits) {
    if (static_cast<int>(d.size()) != dimension) {
      throw SpecError(ErrorCode::DimensionMismatch,
                      "digit has " + std::to_string(d.size()) + " coordinates, expected " +
                          std::to_string(dimension));
    }
    for (int j = 0; j < dimension; ++j) {
      if (d[j] < 0 || d[j] >= bases[j]) {
        throw SpecError(ErrorCode::DigitOutOfRange,
                        "coordinate " + std::to_string(d[j]) + " on axis " + std::to_string(j + 1) +
                            " is outside [0, " + std::to_string(bases[j] - 1) + "]",
                        j + 1, d[j]);
      }
    }
    rows.push_back(d);
  }
  std::sort(rows.begin(), rows.end());
  if (auto dup = std::adjacent_find(rows.begin(), rows.end()); dup != rows.end()) {
    std::string text;
    for (int v : *dup) text += (text.empty() ? "" : ",") + std::to_string(v);
    throw SpecError(ErrorCode::DuplicateDigit, "duplicate digit (" + text + ")");
  }

  SpongeSpec spec;
  spec.bases_ = std::move(bases);
  spec.digits_.reserve(rows.size() * dimension);
  for (const auto& r : rows) spec.digits_.insert(spec.digits_.end(), r.begin(), r.end());

  const auto& b = spec.bases_;
  if (std::all_of(b.begin(), b.end(), [&](int n) { return n == b.front(); })) {
    spec.kind_ = SpongeKind::Cube;
  } else if (std::adjacent_find(b.begin(), b.end(), std::greater_equal<int>()) == b.end()) {
    spec.kind_ = SpongeKind::Sponge;
  } else {
    spec.kind_ = SpongeKind::Mixed;
  }
  return spec;
}

SpongeSpec restrict_axes(const SpongeSpec& spec, std::span<const int> axes) {
  if (axes.empty()) throw Error(ErrorCode::AxisOutOfRange, "no axes selected");
  std::vector<int> bases;
  for (int a : axes) {
    if (a < 1 || a > spec.dim()) {
      throw Error(ErrorCode::AxisOutOfRange, "axis " + std::to_string(a) + " outside 1.." + std::to_string(spec.dim()));
    }
    bases.push_back(spec.base(a - 1));
  }
  std::vector<std::vector<int>> digits;
  digits.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    std::vector<int> row;
    for (int a : axes) row.push_back(spec.digit(i)[a - 1]);
    digits.push_back(std::move(row));
  }
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  return validate_spec(static_cast<int>(axes.size()), std::move(bases), digits);
}

SpongeSpec project(const SpongeSpec& spec, int axes) {
  if (axes < 1 || axes > spec.dim()) {
    throw Error(ErrorCode::AxisOutOfRange,
                "projection onto " + std::to_string(axes) + " axes of a " + std::to_string(spec.dim()) + "-d spec");
  }
  if (axes == spec.dim()) return spec;
  std::vector<int> keep(axes);
  std::iota(keep.begin(), keep.end(), 1);
  return restrict_axes(spec, keep);
}

bool is_degenerate_axis(const SpongeSpec& spec, int axis) {
  const int top = spec.base(axis) - 1;
  bool all_low = true;
  bool all_high = true;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const int v = spec.digit(i)[axis];
    all_low = all_low && v == 0;
    all_high = all_high && v == top;
  }
  return all_low || all_high;
}

bool is_degenerated(const SpongeSpec& spec) {
  for (int j = 0; j < spec.dim(); ++j) {
    if (is_degenerate_axis(spec, j)) return true;
  }
  return false;
}

Reduction reduce_degenerate(const SpongeSpec& spec) {
  Reduction out{spec, {}, spec.dim()};
  out.kept_axes.resize(spec.dim());
  std::iota(out.kept_axes.begin(), out.kept_axes.end(), 1);
  // Dropping a constant axis never merges digits, so the loop settles after one
  // sweep; it is kept as a loop to state the fixed-point contract literally.
  while (true) {
    std::vector<int> keep;
    for (int j = 0; j < out.spec.dim(); ++j) {
      if (!is_degenerate_axis(out.spec, j)) keep.push_back(j + 1);
    }
    if (keep.empty()) {
      throw Error(ErrorCode::AllAxesDegenerate, "every axis is degenerate; the attractor is a single point");
    }
    if (static_cast<int>(keep.size()) == out.spec.dim()) break;
    std::vector<int> kept;
    for (int a : keep) kept.push_back(out.kept_axes[a - 1]);
    out.spec = restrict_axes(out.spec, keep);
    out.kept_axes = std::move(kept);
  }
  return out;
}

bool is_full_product(const SpongeSpec& spec) {
  std::uint64_t total = 1;
  for (int n : spec.bases()) total = saturating_mul(total, static_cast<std::uint64_t>(n));
  return total == spec.size();
}

std::size_t projected_count(const SpongeSpec& spec, int axes) {
  if (axes == 0) return 1;
  return project(spec, axes).size();
}

DimensionValue box_dimension(const SpongeSpec& spec) {
  DimensionValue out{0.0, {}};
  std::size_t previous = 1;
  for (int j = 1; j <= spec.dim(); ++j) {
    const std::size_t count = projected_count(spec, j);
    const int base = spec.base(j - 1);
    const double term = std::log(static_cast<double>(count) / static_cast<double>(previous)) / std::log(base);
    out.terms.push_back({base, count, previous, term});
    previous = count;
  }
  if (spec.kind() == SpongeKind::Cube) {
    out.value = std::log(static_cast<double>(spec.size())) / std::log(spec.base(0));
  } else {
    for (const auto& t : out.terms) out.value += t.value;
  }
  return out;
}

}  // namespace sponge
