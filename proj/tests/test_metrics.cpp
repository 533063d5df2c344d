#include <gtest/gtest.h>

#include "hypertri/metrics.hpp"
#include "support.hpp"

using namespace hypertri;

namespace {

struct Measured {
  PatternCounts counts;
  std::uint64_t open;
};

Measured measure(const Hypergraph& g) {
  const auto index = preprocess(g);
  const auto c = count_all_adv(index);
  return {c, count_open_triangles(index, c)};
}

}  // namespace

TEST(Epsilon, Validation) {
  EXPECT_THROW(EpsilonWeights(PatternArray<double>::Constant(1.5)), std::invalid_argument);
  EXPECT_THROW(EpsilonWeights::uniform(-0.1), std::invalid_argument);
  EpsilonWeights e;
  EXPECT_THROW(e.set(PatternId(3), std::nan("")), std::invalid_argument);
  e.set(PatternId(3), 0.25);
  EXPECT_EQ(e[PatternId(3)], 0.25);
  EXPECT_EQ(EpsilonWeights::single(PatternId(7))[PatternId(7)], 1.0);
}

TEST(Coefficient, EmailUniform) {
  const auto m = measure(fixtures::fig7());
  const auto cc = clustering_coefficient(m.counts, m.open, EpsilonWeights::uniform());
  EXPECT_DOUBLE_EQ(cc.value, 1.125);
  EXPECT_FALSE(cc.zero_denominator);
}

TEST(Coefficient, CoauthorshipSinglePattern) {
  const auto m = measure(fixtures::fig6());
  EXPECT_DOUBLE_EQ(clustering_coefficient(m.counts, m.open, EpsilonWeights::single(PatternId(10))).value, 5.0);
}

TEST(Coefficient, ZeroWeights) {
  const auto m = measure(fixtures::fig6());
  EXPECT_EQ(clustering_coefficient(m.counts, m.open, EpsilonWeights()).value, 0.0);
}

TEST(Coefficient, CenteredDenominator) {
  const auto m = measure(fixtures::fig7());
  const auto cc = clustering_coefficient(m.counts, m.open, EpsilonWeights::uniform(),
                                         Denominator::all_centered);
  EXPECT_DOUBLE_EQ(cc.value, 9.0 / 17.0);
}

TEST(Coefficient, ZeroDenominatorIsFlagged) {
  const auto m = measure(fixtures::parse("1 2\n2 3\n"));
  const auto cc = clustering_coefficient(m.counts, m.open, EpsilonWeights::uniform());
  EXPECT_EQ(cc.value, 0.0);
  EXPECT_TRUE(cc.zero_denominator);
}

TEST(Profile, Fixtures) {
  const auto m6 = measure(fixtures::fig6());
  const auto p6 = per_pattern_profile(m6.counts, m6.open);
  for (int p = 1; p <= 20; ++p) {
    const double expected = p == 10 ? 5.0 : p == 12 ? 2.0 : 0.0;
    EXPECT_DOUBLE_EQ(p6(p - 1), expected) << p;
  }
  const auto m7 = measure(fixtures::fig7());
  const auto p7 = per_pattern_profile(m7.counts, m7.open);
  EXPECT_DOUBLE_EQ(p7(4), 1.125);
  EXPECT_DOUBLE_EQ(p7.sum(), 1.125);
  EXPECT_TRUE((per_pattern_profile(PatternCounts(), 10) == 0).all());
}

TEST(Property, LinearityReductionMonotonicity) {
  std::uint64_t seed = 1;
  for (const auto& rc : fixtures::random_corpus(60)) {
    const auto m = measure(rc.graph);
    if (m.open == 0) continue;
    const auto profile = per_pattern_profile(m.counts, m.open);
    PatternArray<double> w;
    for (int p = 0; p < 20; ++p) w(p) = static_cast<double>((seed = seed * 6364136223846793005ULL + 1) >> 11) / 9007199254740992.0;
    const EpsilonWeights eps(w);
    const double cc = clustering_coefficient(m.counts, m.open, eps).value;
    const double linear = (w * profile).sum();
    EXPECT_LE(std::abs(cc - linear), 1e-12 * std::max(1.0, std::abs(cc)));

    const double uniform = clustering_coefficient(m.counts, m.open, EpsilonWeights::uniform()).value;
    EXPECT_DOUBLE_EQ(uniform, 3.0 * m.counts.total() / m.open);

    for (int p = 1; p <= 20; ++p) {
      EpsilonWeights more = eps;
      more.set(PatternId(p), std::min(1.0, eps[PatternId(p)] + 0.3));
      EXPECT_GE(clustering_coefficient(m.counts, m.open, more).value, cc);
    }
  }
}
