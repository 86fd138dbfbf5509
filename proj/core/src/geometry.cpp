#include "sponge/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "sponge/error.hpp"
#include "internal.hpp"

namespace sponge {

namespace {

bool corner_less(const std::int64_t* a, const std::int64_t* b, int d) {
  for (int j = 0; j < d; ++j) {
    if (a[j] != b[j]) return a[j] < b[j];
  }
  return false;
}

}  // namespace

BoxSet::BoxSet(std::vector<int> bases, std::vector<int> exponents)
    : bases_(std::move(bases)), exponents_(std::move(exponents)) {
  if (bases_.size() != exponents_.size() || bases_.empty() || static_cast<int>(bases_.size()) > kMaxDim) {
    throw Error(ErrorCode::InvalidArgument, "BoxSet needs one exponent per base");
  }
  resolution_.resize(bases_.size());
  for (std::size_t j = 0; j < bases_.size(); ++j) {
    if (exponents_[j] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    resolution_[j] = checked_pow(bases_[j], exponents_[j]);
  }
}

BoxSet::BoxSet(std::vector<int> bases, std::vector<int> exponents, std::vector<std::int64_t> flat_corners)
    : BoxSet(std::move(bases), std::move(exponents)) {
  if (flat_corners.size() % bases_.size() != 0) {
    throw Error(ErrorCode::InvalidArgument, "corner array is not a multiple of the dimension");
  }
  corners_ = std::move(flat_corners);
}

ExactBox BoxSet::box(std::size_t i) const {
  ExactBox b;
  b.dim = dim();
  const auto c = corner(i);
  for (int j = 0; j < dim(); ++j) {
    b.corner[j] = c[j];
    b.exponent[j] = exponents_[j];
  }
  return b;
}

void BoxSet::push_back(std::span<const std::int64_t> c) {
  if (static_cast<int>(c.size()) != dim()) throw Error(ErrorCode::InvalidArgument, "corner dimension mismatch");
  corners_.insert(corners_.end(), c.begin(), c.end());
}

void BoxSet::sort_unique() {
  const int d = dim();
  const std::size_t n = size();
  if (n < 2) return;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  const std::int64_t* base = corners_.data();
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return corner_less(base + a * d, base + b * d, d); });
  std::vector<std::int64_t> sorted;
  sorted.reserve(corners_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::int64_t* c = base + static_cast<std::size_t>(order[k]) * d;
    if (k > 0 && std::equal(c, c + d, sorted.end() - d)) continue;
    sorted.insert(sorted.end(), c, c + d);
  }
  corners_ = std::move(sorted);
}

bool BoxSet::is_sorted_unique() const {
  const int d = dim();
  for (std::size_t i = 1; i < size(); ++i) {
    if (!corner_less(corners_.data() + (i - 1) * d, corners_.data() + i * d, d)) return false;
  }
  return true;
}

std::size_t BoxSet::find(std::span<const std::int64_t> probe) const {
  const int d = dim();
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (corner_less(corners_.data() + mid * d, probe.data(), d)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(probe.begin(), probe.end(), corners_.begin() + static_cast<std::ptrdiff_t>(lo * d))) {
    return lo;
  }
  return size();
}

bool BoxSet::inside_unit_cube(std::size_t i) const {
  const auto c = corner(i);
  for (int j = 0; j < dim(); ++j) {
    if (c[j] < 0 || c[j] + 1 > resolution_[j]) return false;
  }
  return true;
}

bool BoxSet::touches_unit_boundary(std::size_t i) const {
  const auto c = corner(i);
  bool interior = true;
  for (int j = 0; j < dim(); ++j) {
    if (c[j] + 1 < 0 || c[j] > resolution_[j]) return false;  // misses the closed cube
    if (c[j] <= 0 || c[j] + 1 >= resolution_[j]) interior = false;
  }
  return !interior;
}

BoxDistance box_distance_bounds(const ExactBox& a, const ExactBox& b, std::span<const int> bases) {
  if (a.dim != b.dim || static_cast<int>(bases.size()) != a.dim) {
    throw Error(ErrorCode::InvalidArgument, "box dimension mismatch");
  }
  BoxDistance out{Rational(0), Rational(0)};
  for (int j = 0; j < a.dim; ++j) {
    const int e = std::max(a.exponent[j], b.exponent[j]);
    const BigInt sa = big_pow(bases[j], e - a.exponent[j]);
    const BigInt sb = big_pow(bases[j], e - b.exponent[j]);
    const BigInt lo_a = BigInt(a.corner[j]) * sa;
    const BigInt hi_a = BigInt(a.corner[j] + 1) * sa;
    const BigInt lo_b = BigInt(b.corner[j]) * sb;
    const BigInt hi_b = BigInt(b.corner[j] + 1) * sb;
    BigInt gap = 0;
    if (lo_b > hi_a) gap = lo_b - hi_a;
    if (lo_a > hi_b) gap = lo_a - hi_b;
    const BigInt span = std::max<BigInt>(hi_b - lo_a, hi_a - lo_b);
    const BigInt den = big_pow(bases[j], 2 * e);
    out.gap2 += Rational(gap * gap, den);
    out.span2 += Rational(span * span, den);
  }
  return out;
}

bool boxes_intersect(const ExactBox& a, const ExactBox& b, std::span<const int> bases) {
  return box_distance_bounds(a, b, bases).gap2 == 0;
}

int ell(const SpongeSpec& spec, int axis, int level) {
  if (axis < 1 || axis > spec.dim()) throw Error(ErrorCode::AxisOutOfRange, "axis out of range");
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  const BigInt target = big_pow(spec.top_base(), level);
  const int n = spec.base(axis - 1);
  BigInt power = n;
  int l = 0;
  while (power <= target) {
    power *= n;
    ++l;
  }
  return l;
}

std::vector<int> ell_all(const SpongeSpec& spec, int level) {
  std::vector<int> out(spec.dim());
  for (int j = 1; j <= spec.dim(); ++j) out[j - 1] = ell(spec, j, level);
  return out;
}

ExactBox pillar_of(const SpongeSpec& spec, const Word& word) {
  ExactBox box;
  box.dim = spec.dim();
  const int k = static_cast<int>(word.size());
  for (int j = 0; j < spec.dim(); ++j) {
    std::int64_t a = 0;
    for (std::uint32_t letter : word.letters) {
      if (letter >= spec.size()) throw Error(ErrorCode::InvalidArgument, "word letter out of range");
      a = checked_add(checked_mul(a, spec.base(j)), spec.digit(letter)[j]);
    }
    box.corner[j] = a;
    box.exponent[j] = k;
  }
  return box;
}

namespace detail {

std::vector<std::int64_t> expand_words(const SpongeSpec& spec, std::vector<std::int64_t> corners, int steps,
                                       const Limits& limits) {
  const int d = spec.dim();
  const std::size_t N = spec.size();
  for (int s = 0; s < steps; ++s) {
    const std::size_t count = corners.size() / d;
    std::vector<std::int64_t> next(count * N * d);
    parallel_chunks(count, limits.threads, [&](std::size_t begin, std::size_t end, unsigned) {
      for (std::size_t m = begin; m < end; ++m) {
        const std::int64_t* src = corners.data() + m * d;
        for (std::size_t i = 0; i < N; ++i) {
          const auto digit = spec.digit(i);
          std::int64_t* dst = next.data() + (m * N + i) * d;
          for (int j = 0; j < d; ++j) dst[j] = src[j] * spec.base(j) + digit[j];
        }
      }
    });
    corners = std::move(next);
  }
  return corners;
}

}  // namespace detail

BoxSet pillars(const SpongeSpec& spec, int level, const Limits& limits) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "negative level");
  check_budget(saturating_pow(spec.size(), level), limits, "pillar enumeration");
  std::vector<int> exponents(spec.dim(), level);
  for (int j = 0; j < spec.dim(); ++j) (void)checked_pow(spec.base(j), level);
  auto corners = detail::expand_words(spec, std::vector<std::int64_t>(spec.dim(), 0), level, limits);
  BoxSet out(std::vector<int>(spec.bases().begin(), spec.bases().end()), exponents, std::move(corners));
  out.sort_unique();
  out.level = level;
  return out;
}

BoxSet approximate_boxes(const SpongeSpec& spec, int level, const Limits& limits) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "approximate boxes need level >= 1");
  return build_cover(spec, level, {}, limits).boxes;
}

Rational box_diameter2(std::span<const int> bases, std::span<const int> exponents) {
  Rational out = 0;
  for (std::size_t j = 0; j < bases.size(); ++j) out += Rational(BigInt(1), big_pow(bases[j], 2 * exponents[j]));
  return out;
}

void write_box_csv(std::ostream& out, const BoxSet& boxes) {
  for (int j = 1; j <= boxes.dim(); ++j) out << (j > 1 ? "," : "") << "a_" << j << ",e_" << j;
  out << '\n';
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto c = boxes.corner(i);
    for (int j = 0; j < boxes.dim(); ++j) out << (j > 0 ? "," : "") << c[j] << ',' << boxes.exponents()[j];
    out << '\n';
  }
}

}  // namespace sponge
