#include <algorithm>
#include <deque>
#include <set>

#include "sponge/deciders.hpp"
#include "sponge/error.hpp"

namespace sponge {

namespace {

using Key = std::vector<std::int64_t>;

// Digit-by-digit test that `corner` (exponent `level` on every axis, inside
// [0, n_j^level)) is the corner of a level-`level` pillar.
bool is_pillar(const SpongeSpec& spec, std::span<const std::int64_t> corner, int level) {
  const int d = spec.dim();
  std::vector<int> digit(d);
  std::vector<std::int64_t> rest(corner.begin(), corner.end());
  for (int j = 0; j < d; ++j) {
    if (rest[j] < 0 || rest[j] >= checked_pow(spec.base(j), level)) return false;
  }
  for (int l = 0; l < level; ++l) {
    for (int j = 0; j < d; ++j) {
      digit[j] = static_cast<int>(rest[j] % spec.base(j));
      rest[j] /= spec.base(j);
    }
    if (!spec.contains(digit)) return false;
  }
  return true;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Enumerates the neighbours (including diagonal contact) of a box corner.
template <typename Fn>
void for_each_neighbor(const Key& c, Fn&& fn) {
  const int d = static_cast<int>(c.size());
  int total = 1;
  for (int j = 0; j < d; ++j) total *= 3;
  Key n(d);
  for (int code = 0; code < total; ++code) {
    int rest = code;
    bool self = true;
    for (int j = 0; j < d; ++j) {
      const int step = rest % 3 - 1;
      rest /= 3;
      n[j] = c[j] + step;
      self = self && step == 0;
    }
    if (!self) fn(n);
  }
}

VerifyResult fail(std::string message) { return {false, std::move(message)}; }

VerifyResult verify_island(const SpongeSpec& spec, const IslandAtLevel& island) {
  const int d = spec.dim();
  const BoxSet& boxes = island.boxes;
  if (island.level < 1) return fail("island level must be at least 1");
  if (boxes.empty()) return fail("island has no boxes");
  if (boxes.dim() != d) return fail("island dimension mismatch");
  for (int j = 0; j < d; ++j) {
    if (boxes.bases()[j] != spec.base(j) || boxes.exponents()[j] != island.level) {
      return fail("island boxes are not level-" + std::to_string(island.level) + " pillars");
    }
  }
  std::set<Key> members;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto c = boxes.corner(i);
    if (!is_pillar(spec, c, island.level)) return fail("island box is not a pillar");
    members.emplace(c.begin(), c.end());
  }
  for (const Key& c : members) {
    for (int j = 0; j < d; ++j) {
      if (c[j] == 0 || c[j] + 1 == checked_pow(spec.base(j), island.level)) {
        return fail("island box touches the boundary of the unit cube");
      }
    }
  }
  // Closed under contact: every pillar touching a member is a member.
  for (const Key& c : members) {
    bool closed = true;
    for_each_neighbor(c, [&](const Key& n) {
      if (closed && !members.count(n) && is_pillar(spec, n, island.level)) closed = false;
    });
    if (!closed) return fail("a pillar outside the island touches it");
  }
  // Connected.
  std::set<Key> seen{*members.begin()};
  std::deque<Key> queue{*members.begin()};
  while (!queue.empty()) {
    const Key c = queue.front();
    queue.pop_front();
    for_each_neighbor(c, [&](const Key& n) {
      if (members.count(n) && seen.insert(n).second) queue.push_back(n);
    });
  }
  if (seen.size() != members.size()) return fail("island boxes are not connected");
  return {true, "island re-verified"};
}

VerifyResult verify_xi(const SpongeSpec& spec, const XiLevel& xi, const Limits& limits) {
  const int d = spec.dim();
  const int k = xi.level;
  if (k < 0) return fail("negative Xi level");
  std::uint64_t copies = 1;
  for (int j = 0; j < d; ++j) copies *= 3;
  check_budget(saturating_mul(copies, saturating_pow(spec.size(), k)), limits, "Xi verification");
  std::vector<std::int64_t> D(d);
  for (int j = 0; j < d; ++j) D[j] = checked_pow(spec.base(j), k);
  auto in_xi = [&](const Key& c) {
    Key local(d);
    for (int j = 0; j < d; ++j) {
      const std::int64_t h = floor_div(c[j], D[j]);
      if (h < -1 || h > 1) return false;
      local[j] = c[j] - h * D[j];
    }
    return is_pillar(spec, local, k);
  };
  // Seeds: every box of Xi_k meeting [0,1]^d.
  std::set<Key> seen;
  std::deque<Key> queue;
  std::vector<Key> stack{Key(d, 0)};
  for (int l = 0; l < k; ++l) {
    std::vector<Key> next;
    for (const Key& c : stack) {
      for (std::size_t i = 0; i < spec.size(); ++i) {
        Key n(d);
        for (int j = 0; j < d; ++j) n[j] = c[j] * spec.base(j) + spec.digit(i)[j];
        next.push_back(std::move(n));
      }
    }
    stack = std::move(next);
  }
  for (std::uint64_t code = 0; code < copies; ++code) {
    Key shift(d);
    std::uint64_t rest = code;
    for (int j = 0; j < d; ++j) {
      shift[j] = (static_cast<std::int64_t>(rest % 3) - 1) * D[j];
      rest /= 3;
    }
    for (const Key& c : stack) {
      Key n(d);
      bool meets = true;
      for (int j = 0; j < d; ++j) {
        n[j] = c[j] + shift[j];
        meets = meets && n[j] + 1 >= 0 && n[j] <= D[j];
      }
      if (meets && seen.insert(n).second) queue.push_back(std::move(n));
    }
  }
  while (!queue.empty()) {
    const Key c = queue.front();
    queue.pop_front();
    for (int j = 0; j < d; ++j) {
      if (c[j] == -D[j] || c[j] + 1 == 2 * D[j]) return fail("a component meeting the unit cube reaches the boundary of [-1,2]^d");
    }
    for_each_neighbor(c, [&](const Key& n) {
      if (in_xi(n) && seen.insert(n).second) queue.push_back(n);
    });
  }
  return {true, "Xi confinement re-verified"};
}

}  // namespace

VerifyResult verify_certificate(const SpongeSpec& subject, const Verdict& verdict, const Limits& limits) {
  const Certificate& cert = verdict.certificate;
  const int d = subject.dim();
  if (const auto* island = std::get_if<IslandAtLevel>(&cert)) {
    if (verdict.answer != Answer::Yes) return fail("IslandAtLevel certifies only Yes");
    return verify_island(subject, *island);
  }
  if (const auto* xi = std::get_if<XiLevel>(&cert)) {
    if (verdict.answer != Answer::Yes) return fail("XiLevel certifies only Yes");
    return verify_xi(subject, *xi, limits);
  }
  if (const auto* full = std::get_if<FullProjectionInterval>(&cert)) {
    if (verdict.answer != Answer::No) return fail("FullProjectionInterval certifies only No");
    std::vector<int> axes = full->axes;
    std::sort(axes.begin(), axes.end());
    if (static_cast<int>(axes.size()) != d) return fail("FullProjectionInterval must list every axis");
    for (int j = 0; j < d; ++j) {
      if (axes[j] != j + 1) return fail("FullProjectionInterval must list every axis");
    }
    std::size_t product = 1;
    for (int j = 0; j < d; ++j) product *= static_cast<std::size_t>(subject.base(j));
    if (subject.size() != product) return fail("digit set is not the full product");
    return {true, "full digit product re-verified"};
  }
  if (const auto* line = std::get_if<LineSegmentWitness>(&cert)) {
    if (verdict.answer != Answer::No) return fail("LineSegmentWitness certifies only No");
    if (line->axis < 1 || line->axis > d || static_cast<int>(line->others.size()) != d - 1) {
      return fail("LineSegmentWitness has the wrong shape");
    }
    std::vector<int> probe;
    for (int t = 0; t < subject.base(line->axis - 1); ++t) {
      probe.clear();
      for (int j = 0, o = 0; j < d; ++j) probe.push_back(j == line->axis - 1 ? t : line->others[o++]);
      if (!subject.contains(probe)) return fail("digit line is incomplete");
    }
    return {true, "full digit line re-verified"};
  }
  if (verdict.answer != Answer::Unknown) return fail("only Unknown verdicts may carry this certificate");
  return {true, "nothing to verify"};
}

}  // namespace sponge
