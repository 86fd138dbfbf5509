#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "specs.hpp"
#include "sponge/gap_sequence.hpp"
#include "sponge/metrics.hpp"

using namespace sponge;

TEST(GapSequence, CantorMatchesMiddleThirds) {
  const auto seq = gap_sequence(specs::cantor_set(), 3);
  const auto gaps = oracle::cantor_gaps(3);
  ASSERT_GE(seq.resolved_length(), gaps.size());
  for (std::size_t i = 0; i < gaps.size(); ++i) EXPECT_EQ(*seq.g2(i + 1), gaps[i] * gaps[i]) << "i=" << i + 1;
  ASSERT_EQ(seq.entries.size(), 3u);
  EXPECT_EQ(seq.entries[0].multiplicity, 1u);
  EXPECT_EQ(seq.entries[1].multiplicity, 2u);
  EXPECT_EQ(seq.entries[2].multiplicity, 4u);
}

TEST(GapSequence, SinglePointIsEmpty) {
  const auto seq = gap_sequence(validate_spec(1, {3}, {{0}}), 3);
  EXPECT_TRUE(seq.entries.empty());
}

TEST(GapSequence, IntervalIsEmpty) { EXPECT_TRUE(gap_sequence(specs::interval(), 4).entries.empty()); }

TEST(GapSequence, RoundTripAgainstSampledH) {
  for (const auto& spec : {specs::cantor_set(), specs::cantor_dust(), specs::graphlike(), specs::projection_full()}) {
    const auto seq = gap_sequence(spec, 2);
    for (const auto& s : seq.samples) {
      if (s.lo != s.hi) continue;
      const auto h = seq.reconstructed_h(s.delta2_lo);
      ASSERT_TRUE(h.has_value());
      EXPECT_EQ(*h, s.lo);
    }
    for (std::size_t i = 1; i + 1 < seq.entries.size(); ++i) {
      EXPECT_GT(seq.entries[i - 1].delta2_lo, seq.entries[i].delta2_hi);
      EXPECT_GE(seq.entries[i].multiplicity, 1u);
    }
  }
}

TEST(GapSequence, RoundTripAgainstIndependentlySampledH) {
  // The gap sequence determines h_bracket at grid scales where the bracket is tight.
  const auto spec = specs::cantor_dust();
  const auto seq = gap_sequence(spec, 3);
  for (int k = 1; k <= 3; ++k) {
    const Rational delta(BigInt(1), big_pow(3, k));
    const auto b = h_bracket(spec, delta, k + 1);
    ASSERT_TRUE(b.exact());
    EXPECT_EQ(*seq.reconstructed_h(delta * delta), b.lo);
  }
}

TEST(GapSequence, Csv) {
  std::ostringstream out;
  write_gap_csv(out, gap_sequence(specs::cantor_set(), 1));
  EXPECT_EQ(out.str(), "index,delta_lo,delta_hi,multiplicity\n1,0.33333333333333331,0.33333333333333331,1\n");
}
