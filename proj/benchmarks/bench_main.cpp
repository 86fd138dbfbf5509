#include <benchmark/benchmark.h>

#include <sponge/sponge.hpp>

namespace {

using namespace sponge;

SpongeSpec carpet() {
  std::vector<std::vector<int>> d;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 1 || y != 1) d.push_back({x, y});
  return validate_spec(2, {3, 3}, d);
}

SpongeSpec menger() {
  std::vector<std::vector<int>> d;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z)
        if ((x == 1) + (y == 1) + (z == 1) < 2) d.push_back({x, y, z});
  return validate_spec(3, {3, 3, 3}, d);
}

SpongeSpec dust() { return validate_spec(2, {3, 3}, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}); }
SpongeSpec graphlike() { return validate_spec(2, {2, 3}, {{0, 0}, {1, 2}}); }

void BM_Pillars(benchmark::State& state) {
  const auto spec = carpet();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pillars(spec, level));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(saturating_pow(8, level)));
}
BENCHMARK(BM_Pillars)->DenseRange(3, 6);

void BM_ComponentsGrid(benchmark::State& state) {
  const BoxSet p = pillars(carpet(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(components(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}
BENCHMARK(BM_ComponentsGrid)->DenseRange(2, 6);

void BM_ComponentsBruteForce(benchmark::State& state) {
  const BoxSet p = pillars(carpet(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(components_brute_force(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}
BENCHMARK(BM_ComponentsBruteForce)->DenseRange(2, 4);

void BM_ComponentsHierarchical(benchmark::State& state) {
  const auto spec = carpet();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(components_hierarchical(spec, level));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(saturating_pow(8, level)));
}
BENCHMARK(BM_ComponentsHierarchical)->DenseRange(2, 6);

void BM_ComponentsMenger(benchmark::State& state) {
  const BoxSet p = pillars(menger(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(components(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}
BENCHMARK(BM_ComponentsMenger)->DenseRange(2, 4);

void BM_HBracketDust(benchmark::State& state) {
  const auto spec = dust();
  const int k = static_cast<int>(state.range(0));
  const Rational delta(BigInt(1), big_pow(3, k));
  const int depth = k + default_extra_depth(spec, k);
  for (auto _ : state) benchmark::DoNotOptimize(h_bracket(spec, delta, depth));
}
BENCHMARK(BM_HBracketDust)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_HBracketThreads(benchmark::State& state) {
  const auto spec = carpet();
  const Rational delta(BigInt(1), big_pow(3, 5));
  Limits limits;
  limits.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_bracket(spec, delta, 6, limits));
}
BENCHMARK(BM_HBracketThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SpreadGraphlike(benchmark::State& state) {
  const auto spec = graphlike();
  const Rational delta(BigInt(1), big_pow(6, 4));
  for (auto _ : state) benchmark::DoNotOptimize(spread_statistic(spec, delta, 9));
}
BENCHMARK(BM_SpreadGraphlike)->Unit(benchmark::kMillisecond);

void BM_GapSequenceDust(benchmark::State& state) {
  const auto spec = dust();
  for (auto _ : state) benchmark::DoNotOptimize(gap_sequence(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GapSequenceDust)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
