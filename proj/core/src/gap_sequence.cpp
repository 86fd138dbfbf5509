#include "sponge/gap_sequence.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <queue>
#include <tuple>

#include "sponge/delta_graph.hpp"
#include "sponge/error.hpp"
#include "sponge/metrics.hpp"
#include "sponge/union_find.hpp"

namespace sponge {

std::optional<Rational> GapSequence::g2(std::size_t i) const {
  if (i == 0) return std::nullopt;
  for (const auto& e : entries) {
    if (e.h_at <= i && i < e.h_at + e.multiplicity) {
      if (!e.resolved) return std::nullopt;
      return e.delta2_lo;
    }
  }
  return std::nullopt;
}

std::size_t GapSequence::resolved_length() const {
  std::size_t i = 1;
  while (g2(i)) ++i;
  return i - 1;
}

std::optional<std::size_t> GapSequence::reconstructed_h(const Rational& delta2) const {
  std::size_t h = 1;
  for (const auto& e : entries) {
    if (e.delta2_lo > delta2) {
      h += e.multiplicity;
    } else if (e.delta2_hi > delta2) {
      return std::nullopt;  // inside an unresolved stretch
    }
  }
  return h;
}

namespace {

struct Pair {
  Int128 weight;
  std::uint32_t a, b;
};

}  // namespace

GapSequence gap_sequence(const SpongeSpec& spec, int k_max, const Limits& limits) {
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "negative k_max");
  const int floor_k = k_max + 1;
  const int depth = floor_k + default_extra_depth(spec, floor_k);
  const Cover cover = build_cover(spec, depth, {}, limits);
  const BoxSet& boxes = cover.boxes;
  const std::uint64_t B = boxes.size();
  check_budget(saturating_mul(B, B > 0 ? B - 1 : 0) / 2, limits, "gap sequence pair enumeration");
  const int d = spec.dim();

  // All weights live in witness units, where a box corner step on axis j is
  // n_j^{L - e_j} (n_j - 1).
  const AxisScale wscale = witness_scale(spec, cover);
  std::vector<std::int64_t> step(d);
  for (int j = 0; j < d; ++j) {
    step[j] = checked_mul(checked_pow(spec.base(j), cover.word_length - boxes.exponents()[j]), spec.base(j) - 1);
  }

  std::vector<Pair> pairs;
  pairs.reserve(B * (B > 0 ? B - 1 : 0) / 2);
  std::int64_t gap[kMaxDim];
  for (std::uint32_t a = 0; a < B; ++a) {
    const auto ca = boxes.corner(a);
    for (std::uint32_t b = a + 1; b < B; ++b) {
      const auto cb = boxes.corner(b);
      for (int j = 0; j < d; ++j) {
        const std::int64_t diff = cb[j] > ca[j] ? cb[j] - ca[j] : ca[j] - cb[j];
        gap[j] = checked_mul(diff > 0 ? diff - 1 : 0, step[j]);
      }
      pairs.push_back({wscale.scaled(std::span<const std::int64_t>(gap, d)), a, b});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    if (x.weight != y.weight) return x.weight < y.weight;
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });

  std::vector<Int128> lower_mst, upper_mst;
  {
    UnionFind uf(B);
    for (const Pair& p : pairs) {
      if (uf.unite(p.a, p.b)) lower_mst.push_back(p.weight);
    }
  }
  {
    // Lazy Kruskal: the box gap is a lower bound for the witness distance.
    auto later = [](const Pair& x, const Pair& y) {
      if (x.weight != y.weight) return x.weight > y.weight;
      return std::tie(x.a, x.b) > std::tie(y.a, y.b);
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(later)> pending(later);
    UnionFind uf(B);
    std::int64_t wa[kMaxDim], wb[kMaxDim], diff[kMaxDim];
    auto exact = [&](std::uint32_t a, std::uint32_t b) {
      bool first = true;
      Int128 best = 0;
      for (std::uint32_t p = cover.pillar_begin[a]; p < cover.pillar_begin[a + 1]; ++p) {
        for (std::size_t f = 0; f < cover.fixed_points.size(); ++f) {
          witness_point(spec, cover, p, f, wa);
          for (std::uint32_t q = cover.pillar_begin[b]; q < cover.pillar_begin[b + 1]; ++q) {
            for (std::size_t g = 0; g < cover.fixed_points.size(); ++g) {
              witness_point(spec, cover, q, g, wb);
              for (int j = 0; j < d; ++j) diff[j] = wb[j] - wa[j];
              const Int128 v = wscale.scaled(std::span<const std::int64_t>(diff, d));
              if (first || v < best) best = v;
              first = false;
            }
          }
        }
      }
      return best;
    };
    auto drain = [&](const Int128* bound) {
      while (!pending.empty() && (bound == nullptr || pending.top().weight <= *bound)) {
        const Pair p = pending.top();
        pending.pop();
        if (uf.unite(p.a, p.b)) upper_mst.push_back(p.weight);
      }
    };
    for (const Pair& p : pairs) {
      drain(&p.weight);
      if (uf.same(p.a, p.b)) continue;
      const Int128 e = exact(p.a, p.b);
      if (e == p.weight) {
        if (uf.unite(p.a, p.b)) upper_mst.push_back(e);
      } else {
        pending.push({e, p.a, p.b});
      }
    }
    drain(nullptr);
    std::sort(upper_mst.begin(), upper_mst.end());
  }

  auto to_rational = [&](Int128 v) {
    BigInt big = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
    big <<= 64;
    big += static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) & ~std::uint64_t{0});
    return Rational(big, wscale.denominator());
  };

  GapSequence out;
  out.depth = depth;
  out.floor2 = Rational(BigInt(1), big_pow(spec.top_base(), 2 * floor_k));
  const Rational top2 = Rational(d);

  std::vector<Rational> candidates;
  for (Int128 v : lower_mst) candidates.push_back(to_rational(v));
  for (Int128 v : upper_mst) candidates.push_back(to_rational(v));
  for (int k = 0; k <= floor_k; ++k) candidates.emplace_back(BigInt(1), big_pow(spec.top_base(), 2 * k));
  candidates.push_back(top2);
  candidates.push_back(out.floor2);
  candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                  [&](const Rational& c) { return c < out.floor2 || c > top2; }),
                   candidates.end());
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Counts at a squared scale: B minus MST edges of weight <= delta2.
  std::vector<Rational> lower_r, upper_r;
  for (Int128 v : lower_mst) lower_r.push_back(to_rational(v));
  for (Int128 v : upper_mst) upper_r.push_back(to_rational(v));
  std::sort(lower_r.begin(), lower_r.end());
  std::sort(upper_r.begin(), upper_r.end());
  auto count_at = [&](const std::vector<Rational>& mst, const Rational& delta2) {
    const auto merged = static_cast<std::size_t>(std::upper_bound(mst.begin(), mst.end(), delta2) - mst.begin());
    return static_cast<std::size_t>(B) - merged;
  };

  // samples[0] covers delta^2 >= d where h = 1.
  out.samples.push_back({top2, top2, 1, 1});
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Rational& lo_end = candidates[i];
    out.samples.push_back({lo_end, candidates[i - 1], count_at(lower_r, lo_end), count_at(upper_r, lo_end)});
  }

  // Walk down in delta, joining unresolved stretches between resolved samples.
  std::size_t last_value = 1;
  Rational last_edge = top2;  // lower end of the last resolved sample
  bool in_gap = false;
  for (std::size_t i = 1; i < out.samples.size(); ++i) {
    const GapSample& s = out.samples[i];
    if (s.lo != s.hi) {
      in_gap = true;
      continue;
    }
    if (s.lo != last_value) {
      GapEntry e;
      e.multiplicity = s.lo - last_value;
      e.h_at = last_value;
      if (in_gap) {
        e.delta2_lo = s.delta2_hi;
        e.delta2_hi = last_edge;
        e.resolved = false;
      } else {
        e.delta2_lo = last_edge;
        e.delta2_hi = last_edge;
      }
      out.entries.push_back(e);
    }
    in_gap = false;
    last_value = s.lo;
    last_edge = s.delta2_lo;
  }
  return out;
}

std::string format_sqrt(const Rational& squared) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", sqrt_to_double(squared));
  return buf;
}

void write_gap_csv(std::ostream& out, const GapSequence& seq) {
  out << "index,delta_lo,delta_hi,multiplicity\n";
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    const auto& e = seq.entries[i];
    out << (i + 1) << ',' << format_sqrt(e.delta2_lo) << ',' << format_sqrt(e.delta2_hi) << ',' << e.multiplicity
        << '\n';
  }
}

}  // namespace sponge
