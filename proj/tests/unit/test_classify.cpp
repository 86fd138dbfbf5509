#include <gtest/gtest.h>

#include <cmath>

#include "specs.hpp"
#include "sponge/classify.hpp"
#include "sponge/error.hpp"

using namespace sponge;

namespace {

void expect_certificates_verify(const Classification& c) {
  for (const auto& conj : c.evidence) {
    EXPECT_TRUE(verify_certificate(conj.decision.subject, conj.decision.verdict).ok) << conj.projection;
  }
}

}  // namespace

TEST(ClassifyMpl, CantorDustYes) {
  const auto c = classify_maximal_power_law(specs::cantor_dust());
  EXPECT_EQ(c.verdict.answer, Answer::Yes);
  ASSERT_EQ(c.evidence.size(), 1u);
  EXPECT_EQ(std::get<IslandAtLevel>(c.evidence[0].decision.verdict.certificate).level, 2);
  expect_certificates_verify(c);
  ASSERT_TRUE(c.corroboration.exponent.has_value());
  EXPECT_NEAR(c.corroboration.exponent->slope, c.corroboration.dimension, 0.15);
}

TEST(ClassifyMpl, ProjectionFullIsNo) {
  const auto c = classify_maximal_power_law(specs::projection_full());
  EXPECT_EQ(c.verdict.answer, Answer::No);
  EXPECT_EQ(certificate_kind(c.verdict.certificate), "FullProjectionInterval");
  ASSERT_EQ(c.evidence.size(), 2u);
  EXPECT_EQ(c.evidence[0].projection, 1);
  EXPECT_EQ(c.evidence[0].decision.verdict.answer, Answer::No);
  expect_certificates_verify(c);
}

TEST(ClassifyMpl, MixedIsOutOfScope) {
  const auto c = classify_maximal_power_law(validate_spec(3, {2, 2, 3}, {{0, 0, 0}, {1, 1, 2}, {0, 1, 1}}));
  EXPECT_EQ(c.verdict.answer, Answer::Unknown);
  EXPECT_EQ(certificate_kind(c.verdict.certificate), "OutOfTheoremScope");
  EXPECT_TRUE(c.evidence.empty());
}

TEST(ClassifyMpl, CarpetIsNeverYes) {
  const auto c = classify_maximal_power_law(specs::carpet());
  EXPECT_EQ(c.verdict.answer, Answer::Unknown);
}

TEST(ClassifyPd, CantorDustYes) {
  const auto c = classify_perfectly_disconnected(specs::cantor_dust());
  EXPECT_EQ(c.verdict.answer, Answer::Yes);
  EXPECT_EQ(std::get<XiLevel>(c.verdict.certificate).level, 1);
  expect_certificates_verify(c);
  // Bounded spread trend.
  for (double r : c.corroboration.spread_lo) EXPECT_LE(r, 3 * std::sqrt(2.0) + 1e-9);
}

TEST(ClassifyPd, GraphlikeNoViaProjection) {
  const auto c = classify_perfectly_disconnected(specs::graphlike());
  EXPECT_EQ(c.verdict.answer, Answer::No);
  ASSERT_EQ(c.evidence.size(), 2u);
  EXPECT_EQ(c.evidence[0].decision.verdict.answer, Answer::No);
  EXPECT_EQ(c.evidence[1].decision.verdict.answer, Answer::Yes);
  expect_certificates_verify(c);
}

TEST(ClassifyPd, CarpetHasLineSegments) {
  const auto c = classify_perfectly_disconnected(specs::carpet());
  EXPECT_EQ(c.verdict.answer, Answer::No);
  EXPECT_EQ(certificate_kind(c.verdict.certificate), "LineSegmentWitness");
}

TEST(ClassifyPd, DiagonalCrossUnknown) {
  EXPECT_EQ(classify_perfectly_disconnected(specs::saltire()).verdict.answer, Answer::Unknown);
}

TEST(Classify, DegenerateIsReducedWithAxisMap) {
  const auto c = classify_maximal_power_law(validate_spec(2, {3, 3}, {{0, 0}, {0, 2}}));
  EXPECT_EQ(c.reduction.kept_axes, std::vector<int>{2});
  EXPECT_EQ(c.verdict.answer, Answer::Yes);  // reduced to the Cantor set
}

TEST(Classify, RaisingCapsNeverFlipsDefiniteVerdicts) {
  for (const auto& s : {specs::cantor_dust(), specs::graphlike(), specs::projection_full(), specs::carpet()}) {
    for (Property p : {Property::MaximalPowerLaw, Property::PerfectlyDisconnected}) {
      Caps low{1, 1, 3, 1};
      Caps high{3, 2, 3, 1};
      const auto a = classify(s, p, low).verdict.answer;
      const auto b = classify(s, p, high).verdict.answer;
      if (a != Answer::Unknown) EXPECT_EQ(a, b);
    }
  }
}

TEST(Compare, DustVersusGraphlike) {
  const auto r = compare(specs::cantor_dust(), specs::graphlike());
  EXPECT_EQ(r.conclusion, Conclusion::DistinguishedNotLipschitz);
  ASSERT_FALSE(r.reasons.empty());
  EXPECT_EQ(r.reasons.back(), "PerfectlyDisconnected");
}

TEST(Compare, SelfIsNotDistinguished) {
  const auto r = compare(specs::graphlike(), specs::graphlike());
  EXPECT_EQ(r.conclusion, Conclusion::NotDistinguished);
  EXPECT_GE(r.window.indices, 1u);
  EXPECT_DOUBLE_EQ(r.window.min_ratio, 1.0);
  EXPECT_DOUBLE_EQ(r.window.max_ratio, 1.0);
}

TEST(Compare, UnknownVerdictsDoNotDistinguish) {
  Caps caps;
  caps.gap_kmax = 1;
  EXPECT_EQ(compare(specs::cantor_dust(), specs::saltire(), caps).conclusion, Conclusion::NotDistinguished);
}

TEST(Compare, CarpetSegmentsDistinguishFromDust) {
  Caps caps;
  caps.gap_kmax = 1;
  const auto r = compare(specs::cantor_dust(), specs::carpet(), caps);
  EXPECT_EQ(r.conclusion, Conclusion::DistinguishedNotLipschitz);
  EXPECT_EQ(r.reasons, std::vector<std::string>{"PerfectlyDisconnected"});
}

TEST(Compare, Symmetric) {
  Caps caps;
  caps.gap_kmax = 1;
  for (const auto& [a, b] : std::vector<std::pair<SpongeSpec, SpongeSpec>>{
           {specs::cantor_dust(), specs::graphlike()}, {specs::projection_full(), specs::cantor_dust()}}) {
    EXPECT_EQ(compare(a, b, caps).conclusion, compare(b, a, caps).conclusion);
  }
}

TEST(Property, Parse) {
  EXPECT_EQ(parse_property("mpl"), Property::MaximalPowerLaw);
  EXPECT_EQ(parse_property("pd"), Property::PerfectlyDisconnected);
  EXPECT_THROW(parse_property("x"), Error);
}
