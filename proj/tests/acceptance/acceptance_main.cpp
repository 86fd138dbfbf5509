// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. `--only N` runs a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sponge/sponge.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "specs.hpp"

using namespace sponge;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages; any failure flips the outcome.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass_ = false;
    if (++failures_ <= 5) failures_text_ += (failures_text_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& detail) const {
    if (pass_) return {true, detail};
    return {false, detail + " | " + std::to_string(failures_) + " failure(s): " + failures_text_};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string failures_text_;
};

std::string fmt(double x, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

std::vector<oracle::Key> keys_of(const BoxSet& boxes) {
  std::vector<oracle::Key> out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    auto c = boxes.corner(i);
    out.emplace_back(c.begin(), c.end());
  }
  return out;
}

std::uint64_t power(std::uint64_t b, int e) { return saturating_pow(b, e); }

std::size_t oracle_islands(const SpongeSpec& s, int k) {
  const auto set = oracle::pillar_corners(s, k);
  std::vector<oracle::Key> corners(set.begin(), set.end());
  oracle::Dsu dsu(corners.size());
  for (std::size_t a = 0; a < corners.size(); ++a) {
    for (std::size_t b = a + 1; b < corners.size(); ++b) {
      bool touch = true;
      for (std::size_t j = 0; j < corners[a].size(); ++j) {
        touch = touch && std::llabs(corners[a][j] - corners[b][j]) <= 1;
      }
      if (touch) dsu.unite(static_cast<int>(a), static_cast<int>(b));
    }
  }
  std::map<int, bool> boundary;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    bool touches = false;
    for (int j = 0; j < s.dim(); ++j) {
      touches = touches || corners[i][j] == 0 || corners[i][j] + 1 == oracle::ipow(s.base(j), k);
    }
    boundary[dsu.find(static_cast<int>(i))] |= touches;
  }
  std::size_t n = 0;
  for (const auto& [root, b] : boundary) n += b ? 0 : 1;
  return n;
}

std::vector<SpongeSpec> random_suite(unsigned seed, int count, std::size_t max_digits) {
  std::mt19937 rng(seed);
  std::vector<SpongeSpec> out;
  for (int t = 0; static_cast<int>(out.size()) < count; ++t) {
    const int d = 1 + t % 3;
    const double fill = 0.25 + 0.5 * ((t * 7) % 10) / 10.0;
    auto s = oracle::random_spec(rng, d, d == 1 ? 8 : d == 2 ? 5 : 3, fill);
    if (s.size() >= 2 && s.size() <= max_digits) out.push_back(std::move(s));
  }
  return out;
}

std::vector<SpongeSpec> named_suite() {
  return {specs::cantor_set(),      specs::interval(),       specs::cantor_dust(), specs::carpet(),
          specs::menger(),          specs::projection_full(), specs::graphlike(),  specs::center_island(),
          specs::saltire()};
}

// 1. Accelerated and hierarchical component counts against the all-pairs oracle.
Outcome oracle_equivalence() {
  Check c;
  auto suite = named_suite();
  for (auto& s : random_suite(101, 56, 40)) suite.push_back(std::move(s));
  std::size_t levels = 0, largest = 0;
  for (const auto& spec : suite) {
    const std::uint64_t N = spec.size();
    int k_oracle = 1, k_big = 1;
    while (k_oracle < 8 && power(N, k_oracle + 1) <= 4000) ++k_oracle;
    while (k_big < 10 && power(N, k_big + 1) <= 100000) ++k_big;
    for (int k = 1; k <= k_big; ++k) {
      const BoxSet p = pillars(spec, k);
      const auto fast = components(p);
      const auto hier = components_hierarchical(spec, k);
      c.expect(fast.component_of == hier.component_of, "hierarchical labels differ at level " + std::to_string(k));
      c.expect(fast.island_count == hier.island_count, "hierarchical island count differs");
      largest = std::max(largest, p.size());
      ++levels;
      if (k > k_oracle) continue;
      const auto oracle_set = oracle::pillar_corners(spec, k);
      const auto lib_keys = keys_of(p);
      c.expect(std::vector<oracle::Key>(oracle_set.begin(), oracle_set.end()) == lib_keys, "pillar sets differ");
      const std::size_t truth = oracle::touching_components(
          std::vector<oracle::Key>(oracle_set.begin(), oracle_set.end()));
      const auto brute = components_brute_force(p);
      c.expect(fast.component_count == truth, "accelerated count " + std::to_string(fast.component_count) +
                                                  " != oracle " + std::to_string(truth));
      c.expect(brute.component_count == truth, "brute-force count differs from oracle");
      c.expect(hier.component_count == truth, "hierarchical count differs from oracle");
      c.expect(brute.component_of == fast.component_of, "brute-force labels differ");
    }
  }
  c.expect(suite.size() >= 50, "suite has fewer than 50 specs");
  return c.done(std::to_string(suite.size()) + " specs, " + std::to_string(levels) + " levels, up to " +
                std::to_string(largest) + " boxes");
}

// 2. Cantor dust: tight brackets and the box-dimension slope.
Outcome cantor_dust_exponent() {
  Check c;
  const auto spec = specs::cantor_dust();
  const HProfile profile = h_profile(spec, 8);
  std::uint64_t expected = 1;
  for (const auto& row : profile.rows) {
    c.expect(row.bracket.exact(), "bracket not tight at k=" + std::to_string(row.k));
    // delta = 3^-k joins the four level-k squares of each level-(k-1) square and nothing else.
    c.expect(row.bracket.lo == expected, "h(3^-" + std::to_string(row.k) + ") = " + std::to_string(row.bracket.lo) +
                                             ", expected " + std::to_string(expected));
    expected *= 4;
  }
  const auto est = estimate_exponent(profile);
  const double target = std::log(4.0) / std::log(3.0);
  c.expect(std::abs(est.slope - target) <= 0.05, "slope " + fmt(est.slope, 8));
  return c.done("slope " + fmt(est.slope, 8) + " vs " + fmt(target, 8) + ", k<=8 all tight");
}

// 3. Sierpinski carpet: connected, flat profile, no definite Yes.
Outcome connected_carpet() {
  Check c;
  const auto spec = specs::carpet();
  for (int k = 1; k <= 5; ++k) {
    const BoxSet p = pillars(spec, k);
    c.expect(components(p).component_count == 1, "N_c(F_k) != 1 at k=" + std::to_string(k));
    c.expect(components_hierarchical(spec, k).component_count == 1, "hierarchical N_c != 1");
    if (k <= 4) {
      const auto set = oracle::pillar_corners(spec, k);
      c.expect(oracle::touching_components({set.begin(), set.end()}) == 1, "oracle N_c != 1");
    }
  }
  const HProfile profile = h_profile(spec, 5);
  for (const auto& row : profile.rows) {
    c.expect(row.bracket.lo == 1 && row.bracket.hi == 1, "bracket not (1,1) at k=" + std::to_string(row.k));
  }
  const auto est = estimate_exponent(profile);
  c.expect(std::abs(est.slope) < 1e-12, "exponent " + fmt(est.slope));
  const auto mpl = classify_maximal_power_law(spec);
  const auto pd = classify_perfectly_disconnected(spec);
  c.expect(mpl.verdict.answer == Answer::Unknown, "mpl verdict " + std::string(to_string(mpl.verdict.answer)));
  c.expect(pd.verdict.answer != Answer::Yes, "pd verdict is Yes");
  c.expect(islands(spec, 4).island_count == 0, "carpet has an island");
  return c.done("N_c=1 and (1,1) for k<=5, exponent " + fmt(est.slope) + ", mpl " +
                std::string(to_string(mpl.verdict.answer)) + " (" +
                std::string(certificate_kind(mpl.verdict.certificate)) + "), pd " +
                std::string(to_string(pd.verdict.answer)) + " (" +
                std::string(certificate_kind(pd.verdict.certificate)) + ")");
}

// 4. Full first projection defeats the maximal power law.
Outcome projection_condition_mpl() {
  Check c;
  const auto spec = specs::projection_full();
  const auto cl = classify_maximal_power_law(spec);
  c.expect(cl.verdict.answer == Answer::No, "verdict is not No");
  c.expect(std::holds_alternative<FullProjectionInterval>(cl.verdict.certificate), "certificate is not FullProjectionInterval");
  for (const auto& e : cl.evidence) {
    c.expect(verify_certificate(e.decision.subject, e.decision.verdict).ok, "evidence fails re-verification");
  }
  const double dim = box_dimension(spec).value;
  const HProfile profile = h_profile(spec, 7);
  std::vector<double> v;
  std::string values;
  for (const auto& row : profile.rows) {
    if (row.k < 3) continue;
    v.push_back(static_cast<double>(row.bracket.hi) * std::pow(3.0, -row.k * dim));
    values += (values.empty() ? "" : ", ") + fmt(v.back());
  }
  for (std::size_t i = 1; i < v.size(); ++i) c.expect(v[i] < v[i - 1], "not decreasing at k=" + std::to_string(i + 3));
  return c.done("No(FullProjectionInterval); hi*3^(-k dim) for k=3..7: " + values);
}

// 5. Totally disconnected, yet not perfectly disconnected.
Outcome projection_condition_pd() {
  Check c;
  const auto spec = specs::graphlike();
  const auto td = is_totally_disconnected(spec, 3);
  c.expect(td.verdict.answer == Answer::Yes, "td verdict is not Yes");
  c.expect(verify_certificate(td.subject, td.verdict).ok, "td certificate fails re-verification");
  const auto pd = classify_perfectly_disconnected(spec);
  c.expect(pd.verdict.answer == Answer::No, "pd verdict is not No");
  const auto* full = std::get_if<FullProjectionInterval>(&pd.verdict.certificate);
  c.expect(full && full->axes == std::vector<int>{1}, "pd certificate is not FullProjectionInterval{1}");

  std::vector<double> ratios;
  std::string values;
  for (int k = 2; k <= 5; ++k) {
    const Rational delta(BigInt(1), big_pow(6, k));
    int depth = 1;
    while (box_diameter2(spec.bases(), ell_all(spec, depth)) * 16 > delta * delta) ++depth;
    const auto st = spread_statistic(spec, delta, depth);
    c.expect(st.ratio2_lo <= st.ratio2_hi, "spread bracket inverted");
    ratios.push_back(st.ratio_lo());
    values += (values.empty() ? "" : ", ") + fmt(ratios.back());
  }
  std::string growth;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    const double g = ratios[i] / ratios[i - 1];
    growth += (growth.empty() ? "" : ", ") + fmt(g, 3);
    c.expect(g >= 1.4, "growth " + fmt(g) + " < 1.4 at k=" + std::to_string(i + 2));
  }
  return c.done("td Yes(" + std::string(certificate_kind(td.verdict.certificate)) +
                "), pd No(FullProjectionInterval{1}); lo-ratio at 6^-k, k=2..5: " + values + " (growth " + growth +
                ")");
}

// 6. Island scaling for the centre-island cube.
Outcome island_scaling() {
  Check c;
  const auto spec = specs::center_island();
  std::string values;
  std::uint64_t bound = 1;
  for (int k = 1; k <= 3; ++k) {
    const auto r = islands(spec, k);
    const auto truth = oracle_islands(spec, k);
    c.expect(r.island_count == truth, "island count " + std::to_string(r.island_count) + " != oracle " +
                                          std::to_string(truth));
    c.expect(r.island_count >= bound, "fewer than 17^(k-1) islands at k=" + std::to_string(k));
    values += (values.empty() ? "" : ", ") + std::to_string(r.island_count) + ">=" + std::to_string(bound);
    bound *= 17;
  }
  return c.done("islands k=1..3: " + values + " (oracle agrees)");
}

// 7. Finite type: bounded pillar count per component.
Outcome finite_type() {
  Check c;
  auto suite = named_suite();
  for (auto& s : random_suite(707, 60, 10)) suite.push_back(std::move(s));
  int certified = 0;
  std::size_t checks = 0;
  for (const auto& spec : suite) {
    std::optional<Decision> decided;
    try {
      decided = is_totally_disconnected(spec, 3);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AllAxesDegenerate) continue;
      throw;
    }
    const Decision& td = *decided;
    const auto* xi = std::get_if<XiLevel>(&td.verdict.certificate);
    if (td.verdict.answer != Answer::Yes || !xi) continue;
    ++certified;
    c.expect(verify_certificate(td.subject, td.verdict).ok, "XiLevel certificate fails re-verification");
    const std::uint64_t bound = finite_type_bound(td.subject, td.verdict);
    for (int k = 1; k <= xi->level + 3; ++k) {
      const std::size_t m = max_pillars_per_component(td.subject, k);
      c.expect(m <= bound, "max pillars " + std::to_string(m) + " > " + std::to_string(bound));
      if (power(td.subject.size(), k) <= 3000) {
        const auto set = oracle::pillar_corners(td.subject, k);
        std::vector<oracle::Key> corners(set.begin(), set.end());
        oracle::Dsu dsu(corners.size());
        for (std::size_t a = 0; a < corners.size(); ++a)
          for (std::size_t b = a + 1; b < corners.size(); ++b) {
            bool touch = true;
            for (std::size_t j = 0; j < corners[a].size(); ++j)
              touch = touch && std::llabs(corners[a][j] - corners[b][j]) <= 1;
            if (touch) dsu.unite(static_cast<int>(a), static_cast<int>(b));
          }
        std::map<int, std::size_t> sizes;
        std::size_t biggest = 0;
        for (std::size_t i = 0; i < corners.size(); ++i) biggest = std::max(biggest, ++sizes[dsu.find(int(i))]);
        c.expect(m == biggest, "max_pillars_per_component disagrees with oracle");
      }
      ++checks;
    }
  }
  c.expect(certified >= 5, "too few XiLevel certificates in the suite");
  return c.done(std::to_string(certified) + " of " + std::to_string(suite.size()) + " specs certified, " +
                std::to_string(checks) + " level checks");
}

// 8. Cantor set gap sequence, and rebuilding h from the gaps.
Outcome gap_sequence_check() {
  Check c;
  const auto seq = gap_sequence(specs::cantor_set(), 3);
  const auto truth = oracle::cantor_gaps(3);
  std::vector<std::pair<Rational, std::size_t>> grouped;
  for (const auto& g : truth) {
    if (!grouped.empty() && grouped.back().first == g) ++grouped.back().second;
    else grouped.push_back({g, 1});
  }
  c.expect(seq.entries.size() >= 3, "fewer than three entries");
  std::string values;
  for (std::size_t i = 0; i < 3 && i < seq.entries.size(); ++i) {
    const auto& e = seq.entries[i];
    c.expect(e.resolved && e.delta2_lo == e.delta2_hi, "entry " + std::to_string(i + 1) + " unresolved");
    c.expect(e.delta2_lo == grouped[i].first * grouped[i].first, "gap value differs at entry " + std::to_string(i + 1));
    c.expect(e.multiplicity == grouped[i].second, "multiplicity differs at entry " + std::to_string(i + 1));
    values += (values.empty() ? "" : ", ") + format_sqrt(e.delta2_lo) + "x" + std::to_string(e.multiplicity);
  }
  for (std::size_t i = 1; i <= truth.size(); ++i) {
    const auto g = seq.g2(i);
    c.expect(g && *g == truth[i - 1] * truth[i - 1], "g_" + std::to_string(i) + " differs");
  }

  std::size_t checked = 0;
  const std::vector<SpongeSpec> suite{specs::cantor_set(), specs::cantor_dust(), specs::graphlike(),
                                      specs::saltire(), specs::carpet(), specs::projection_full()};
  for (const auto& spec : suite) {
    const auto gs = spec.dim() == 1 ? gap_sequence(spec, 4) : gap_sequence(spec, 2);
    for (const auto& s : gs.samples) {
      if (s.lo != s.hi) continue;
      const auto h = gs.reconstructed_h(s.delta2_lo);
      if (!h) continue;
      ++checked;
      c.expect(*h == s.lo, "round trip " + std::to_string(*h) + " != sampled " + std::to_string(s.lo));
    }
  }
  for (const auto& s : gap_sequence(specs::cantor_set(), 4).samples) {
    Rational root;
    if (!exact_sqrt(s.delta2_lo, root)) continue;
    c.expect(s.lo == s.hi && s.lo == oracle::cantor_h(root), "Cantor sample differs from closed form");
  }
  c.expect(checked >= 10, "too few resolved samples");
  return c.done("leading entries " + values + "; " + std::to_string(checked) + " resolved samples round-trip");
}

// 9. Upper bound for fractal cubes without trivial points.
Outcome no_trivial_point_bound() {
  Check c;
  std::vector<std::pair<std::string, SpongeSpec>> suite{
      {"[0,1]", specs::interval()},
      {"full 3x3", specs::full({3, 3})},
      {"full 2x2x2", specs::full({2, 2, 2})},
      {"carpet", specs::carpet()},
      {"plus", validate_spec(2, {3, 3}, {{0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}})},
      {"H", validate_spec(2, {3, 3}, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 0}, {2, 1}, {2, 2}})},
      {"L 2x2", validate_spec(2, {2, 2}, {{0, 0}, {0, 1}, {1, 0}})},
      {"cube minus corner", validate_spec(3, {2, 2, 2}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                                          {1, 0, 0}, {1, 0, 1}, {1, 1, 0}})},
      {"tripod", validate_spec(3, {2, 2, 2}, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}})},
  };
  constexpr std::uint64_t kBoxCap = 5'000'000;
  double worst = 0;
  for (const auto& [name, spec] : suite) {
    c.expect(spec.kind() == SpongeKind::Cube, name + " is not a cube");
    c.expect(has_trivial_points(spec, 3).verdict.answer != Answer::Yes, name + " has trivial points");
    const int d = spec.dim();
    const std::uint64_t m = spec.base(0), r = spec.size();
    int q = 1;
    while (power(m, 2 * q) <= static_cast<std::uint64_t>(d)) ++q;
    for (int k = 1; k <= 6; ++k) {
      const int depth = k + default_extra_depth(spec, k);
      c.expect(power(r, depth) <= kBoxCap, name + " needs too many boxes");
      if (power(r, depth) > kBoxCap) continue;
      const auto b = h_bracket(spec, Rational(BigInt(1), big_pow(static_cast<std::int64_t>(m), k)), depth);
      const BigInt bound = BigInt(2 * d) * big_pow(static_cast<std::int64_t>(r - 1), k + q);
      c.expect(BigInt(b.hi) <= bound, name + " k=" + std::to_string(k) + ": hi " + std::to_string(b.hi) +
                                          " > " + bound.str());
      worst = std::max(worst, static_cast<double>(b.hi) / static_cast<double>(bound));
    }
  }
  return c.done(std::to_string(suite.size()) + " cubes, k<=6, largest hi/bound " + fmt(worst));
}

// 10. CLI output bytes do not depend on the thread count.
Outcome determinism() {
  Check c;
  const fs::path dir = fs::temp_directory_path() / ("sponge_acceptance_" + std::to_string(::getpid()));
  std::vector<std::string> spec_files;
  for (const auto& e : fs::directory_iterator(SPONGE_SPECS_DIR)) {
    if (e.path().extension() == ".json") spec_files.push_back(e.path().string());
  }
  std::sort(spec_files.begin(), spec_files.end());
  auto sp = [](const char* n) { return std::string(SPONGE_SPECS_DIR) + "/" + n + ".json"; };

  std::vector<std::vector<std::string>> commands;
  for (const auto& f : spec_files) {
    commands.push_back({"analyze", "--kmax", "3", f});
    commands.push_back({"islands", "--depth", "3", f});
    commands.push_back({"td", "--cap", "3", f});
    commands.push_back({"hprofile", "--kmax", "3", f});
    commands.push_back({"hprofile", "--kmax", "3", "--format", "jsonl", f});
    commands.push_back({"gapseq", "--kmax", "2", f});
    commands.push_back({"classify", "--property", "mpl", "--kmax", "3", f});
    commands.push_back({"classify", "--property", "pd", "--kmax", "3", f});
  }
  commands.push_back({"compare", "--kmax", "3", sp("cantor_dust"), sp("graphlike")});
  commands.push_back({"compare", "--kmax", "3", sp("cantor_dust"), sp("carpet")});
  commands.push_back({"compare", "--kmax", "3", sp("saltire"), sp("center_island")});

  auto snapshot = [&](const std::vector<std::string>& cmd, unsigned threads) {
    fs::remove_all(dir);
    std::vector<std::string> args = cmd;
    args.insert(args.end(), {"--threads", std::to_string(threads), "--out", dir.string()});
    std::ostringstream out, err;
    const int code = sponge::cli::run(args, out, err);
    std::string blob = "exit=" + std::to_string(code) + "\n" + out.str() + "\n--stderr--\n" + err.str();
    std::vector<fs::path> files;
    if (fs::exists(dir)) {
      for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& p : files) {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream s;
      s << in.rdbuf();
      blob += "\n--" + p.filename().string() + "--\n" + s.str();
    }
    if (code == 0 && cmd[0] == "classify") {
      std::ostringstream vout, verr;
      const int vcode = sponge::cli::run({"verify-cert", (dir / "report.json").string()}, vout, verr);
      blob += "\n--verify exit=" + std::to_string(vcode) + "--\n" + vout.str();
    }
    return blob;
  };

  std::size_t bytes = 0;
  for (const auto& cmd : commands) {
    const std::string one = snapshot(cmd, 1);
    bytes += one.size();
    for (unsigned t : {4u, 8u}) {
      std::string line;
      for (const auto& a : cmd) line += a + " ";
      c.expect(snapshot(cmd, t) == one, "output differs at " + std::to_string(t) + " threads: " + line);
    }
  }
  fs::remove_all(dir);
  return c.done(std::to_string(commands.size()) + " commands over " + std::to_string(spec_files.size()) +
                " spec files, " + std::to_string(bytes) + " bytes per thread setting");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  }
  struct Criterion {
    const char* name;
    double time_limit;  // seconds, 0 when unlimited
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria{
      {"oracle equivalence", 120, oracle_equivalence},
      {"cantor dust exponent", 60, cantor_dust_exponent},
      {"connected carpet", 60, connected_carpet},
      {"projection condition (maximal power law)", 0, projection_condition_mpl},
      {"projection condition (perfect disconnectedness)", 0, projection_condition_pd},
      {"island scaling", 0, island_scaling},
      {"finite type", 0, finite_type},
      {"gap sequence", 0, gap_sequence_check},
      {"no-trivial-point bound", 0, no_trivial_point_bound},
      {"determinism across thread counts", 0, determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    const auto& cr = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.time_limit > 0 && secs > cr.time_limit) {
      o.pass = false;
      o.detail += " | exceeded " + fmt(cr.time_limit) + " s";
    }
    std::printf("%s %zu %s: %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", i + 1, cr.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
