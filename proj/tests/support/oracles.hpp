#pragma once

// Slow reference implementations used as test oracles. They share only the
// SpongeSpec data type and the Rational alias with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sponge/model.hpp"
#include "sponge/rational.hpp"

namespace oracle {

using sponge::BigInt;
using sponge::Rational;
using sponge::SpongeSpec;
using Key = std::vector<long long>;

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Largest l with n_j^l <= n_d^k, found from a floating guess and then fixed up exactly.
inline int ell(const std::vector<int>& bases, int axis0, int k) {
  const BigInt target = [&] {
    BigInt t = 1;
    for (int i = 0; i < k; ++i) t *= bases.back();
    return t;
  }();
  auto pow_le = [&](int l) {
    BigInt p = 1;
    for (int i = 0; i < l; ++i) p *= bases[axis0];
    return p <= target;
  };
  int l = static_cast<int>(std::floor(k * std::log(bases.back()) / std::log(bases[axis0])));
  l = std::max(l - 2, 0);
  while (pow_le(l + 1)) ++l;
  while (l > 0 && !pow_le(l)) --l;
  return l;
}

inline std::vector<int> bases_of(const SpongeSpec& s) { return {s.bases().begin(), s.bases().end()}; }

inline std::vector<std::vector<int>> digits_of(const SpongeSpec& s) { return s.digit_list(); }

// Every word of length k, letters as digit indices, in lexicographic order.
inline std::vector<std::vector<int>> words(std::size_t N, int k) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (std::size_t c = 0; c < N; ++c) {
        auto v = w;
        v.push_back(static_cast<int>(c));
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Level-k pillar corners from the base-n expansion a_j = sum_l i_j(w_l) n_j^{k-l}.
inline std::set<Key> pillar_corners(const SpongeSpec& s, int k) {
  const auto D = digits_of(s);
  const int d = s.dim();
  std::set<Key> out;
  for (const auto& w : words(D.size(), k)) {
    Key a(d, 0);
    for (int j = 0; j < d; ++j) {
      for (int l = 1; l <= k; ++l) a[j] += D[w[l - 1]][j] * ipow(s.base(j), k - l);
    }
    out.insert(a);
  }
  return out;
}

struct ApproxBox {
  Key corner;
  std::vector<std::vector<Rational>> witnesses;  // attractor points inside the box
};

// Approximate boxes at level k keyed by corner, with the points S_w(fix_c)
// for every generating word w of length ell_1(k) and digit c.
inline std::map<Key, ApproxBox> approx_boxes(const SpongeSpec& s, int k, bool with_witnesses = true) {
  const auto D = digits_of(s);
  const auto b = bases_of(s);
  const int d = s.dim();
  std::vector<int> ls(d);
  for (int j = 0; j < d; ++j) ls[j] = ell(b, j, k);
  const int L = ls[0];
  std::map<Key, ApproxBox> out;
  for (const auto& w : words(D.size(), L)) {
    Key a(d, 0);
    for (int j = 0; j < d; ++j) {
      for (int l = 1; l <= ls[j]; ++l) a[j] += D[w[l - 1]][j] * ipow(b[j], ls[j] - l);
    }
    auto& box = out[a];
    box.corner = a;
    if (!with_witnesses) continue;
    std::vector<Rational> base(d, Rational(0));
    for (int j = 0; j < d; ++j) {
      for (int l = 1; l <= L; ++l) base[j] += Rational(BigInt(D[w[l - 1]][j]), sponge::big_pow(b[j], l));
    }
    for (const auto& c : D) {
      std::vector<Rational> x = base;
      for (int j = 0; j < d; ++j) x[j] += Rational(BigInt(c[j]), sponge::big_pow(b[j], L) * (b[j] - 1));
      box.witnesses.push_back(std::move(x));
    }
  }
  return out;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
  std::size_t count() {
    std::set<int> r;
    for (std::size_t i = 0; i < p.size(); ++i) r.insert(find(static_cast<int>(i)));
    return r.size();
  }
};

// Components of closed boxes of one shape: touching iff every corner differs by at most 1.
inline std::size_t touching_components(const std::vector<Key>& corners) {
  Dsu dsu(corners.size());
  for (std::size_t a = 0; a < corners.size(); ++a) {
    for (std::size_t b = a + 1; b < corners.size(); ++b) {
      bool touch = true;
      for (std::size_t j = 0; j < corners[a].size(); ++j) touch = touch && std::llabs(corners[a][j] - corners[b][j]) <= 1;
      if (touch) dsu.unite(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return dsu.count();
}

struct DeltaCounts {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// lo: boxes joined when their closed gap is <= delta; hi: joined when some
// pair of witnesses is within delta. Both computed over all pairs in exact rationals.
inline DeltaCounts delta_counts(const SpongeSpec& s, int depth, const Rational& delta) {
  const auto boxes = approx_boxes(s, depth);
  const auto b = bases_of(s);
  const int d = s.dim();
  std::vector<Rational> side(d);
  for (int j = 0; j < d; ++j) side[j] = Rational(BigInt(1), sponge::big_pow(b[j], ell(b, j, depth)));
  std::vector<const ApproxBox*> list;
  for (const auto& [k, v] : boxes) list.push_back(&v);
  const Rational d2 = delta * delta;
  Dsu lo(list.size()), hi(list.size());
  for (std::size_t x = 0; x < list.size(); ++x) {
    for (std::size_t y = x + 1; y < list.size(); ++y) {
      Rational gap2 = 0;
      for (int j = 0; j < d; ++j) {
        const Rational ax = list[x]->corner[j] * side[j], bx = ax + side[j];
        const Rational ay = list[y]->corner[j] * side[j], by = ay + side[j];
        Rational g = 0;
        if (ay > bx) g = ay - bx;
        if (ax > by) g = ax - by;
        gap2 += g * g;
      }
      if (gap2 > d2) continue;  // witnesses lie inside their boxes
      lo.unite(static_cast<int>(x), static_cast<int>(y));
      bool close = false;
      for (const auto& p : list[x]->witnesses) {
        for (const auto& q : list[y]->witnesses) {
          Rational r = 0;
          for (int j = 0; j < d; ++j) r += (p[j] - q[j]) * (p[j] - q[j]);
          if (r <= d2) {
            close = true;
            break;
          }
        }
        if (close) break;
      }
      if (close) hi.unite(static_cast<int>(x), static_cast<int>(y));
    }
  }
  return {lo.count(), hi.count()};
}

// h of the middle-thirds Cantor set: 2^k for 3^-(k+1) <= delta < 3^-k, 1 for delta >= 1/3.
inline std::size_t cantor_h(const Rational& delta) {
  std::size_t h = 1;
  Rational t(BigInt(1), BigInt(3));
  while (delta < t) {
    h *= 2;
    t /= 3;
  }
  return h;
}

// Middle-thirds gap lengths, each repeated by its count, longest first.
inline std::vector<Rational> cantor_gaps(int levels) {
  std::vector<Rational> out;
  for (int l = 1; l <= levels; ++l) {
    for (long long c = 0; c < ipow(2, l - 1); ++c) out.emplace_back(BigInt(1), sponge::big_pow(3, l));
  }
  return out;
}

// Random valid spec; bases non-decreasing, about `fill` of the cells used.
inline SpongeSpec random_spec(std::mt19937& rng, int d, int max_base, double fill) {
  std::uniform_int_distribution<int> base(2, max_base);
  std::vector<int> bases(d);
  for (auto& n : bases) n = base(rng);
  std::sort(bases.begin(), bases.end());
  std::vector<std::vector<int>> digits;
  std::bernoulli_distribution keep(fill);
  std::vector<int> cell(d, 0);
  while (true) {
    if (keep(rng)) digits.push_back(cell);
    int j = d - 1;
    while (j >= 0 && ++cell[j] == bases[j]) cell[j--] = 0;
    if (j < 0) break;
  }
  if (digits.empty()) digits.push_back(std::vector<int>(d, 0));
  return sponge::validate_spec(d, bases, digits);
}

}  // namespace oracle
