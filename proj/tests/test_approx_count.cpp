#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <tuple>

#include "hypertri/approx_count.hpp"
#include "support.hpp"

using namespace hypertri;

namespace {

EstimateConfig config(EstimatorMode mode, std::uint64_t alpha, std::uint64_t seed = 1) {
  EstimateConfig c;
  c.mode = mode;
  c.alpha = alpha;
  c.seed = seed;
  return c;
}

PatternArray<double> exact(const Hypergraph& g) {
  return count_all_adv(preprocess(g)).slots().cast<double>();
}

std::vector<Hypergraph> small_graphs() {
  std::vector<Hypergraph> out{fixtures::fig6(), fixtures::fig7(), fixtures::ring(),
                              fixtures::chain()};
  for (const auto& rc : fixtures::random_corpus(40)) out.push_back(rc.graph);
  return out;
}

}  // namespace

TEST(Budget, SingleKind) {
  EXPECT_EQ(split_sample_budget(100, 0, 100), (SampleBudget{100, 0, 0, 0}));
  EXPECT_EQ(split_sample_budget(0, 7, 10), (SampleBudget{0, 10, 0, 0}));
}

TEST(Budget, EvenSplit) { EXPECT_EQ(split_sample_budget(50, 50, 100), (SampleBudget{25, 25, 25, 25})); }

TEST(Budget, Email) {
  EXPECT_EQ(split_sample_budget(3, 5, 64), (SampleBudget{9, 25, 15, 15}));
  EXPECT_EQ(split_sample_budget(preprocess(fixtures::fig7()), 64), (SampleBudget{9, 25, 15, 15}));
}

TEST(Budget, RemainderAndMinimumShare) {
  for (std::uint64_t t : {0, 1, 3, 17, 200})
    for (std::uint64_t c : {0, 1, 5, 40})
      for (std::uint64_t a : {4, 10, 99, 1000}) {
        if (t + c == 0) continue;
        const auto b = split_sample_budget(t, c, a);
        EXPECT_EQ(b[0] + b[1] + b[2] + b[3], a);
        if (t) EXPECT_GE(b[0], 1u);
        if (c) EXPECT_GE(b[1], 1u);
        if (t && c) {
          EXPECT_GE(b[2], 1u);
          EXPECT_GE(b[3], 1u);
        }
      }
  // 1 intersection wedge among 100: its shares round to 0 but are lifted to 1.
  const auto b = split_sample_budget(1, 99, 10);
  EXPECT_EQ(b, (SampleBudget{1, 7, 1, 1}));
  EXPECT_EQ(split_sample_budget(0, 0, 10), (SampleBudget{0, 0, 0, 0}));
}

TEST(Sampler, UniformIsCounterBased) {
  const UniformWedgeSampler s(42);
  for (std::uint64_t d = 0; d < 1000; ++d) EXPECT_LT(s.pick(1, d, 7), 7u);
  EXPECT_EQ(s.pick(2, 123, 1000), UniformWedgeSampler(42).pick(2, 123, 1000));
  int differ = 0;
  for (std::uint64_t d = 0; d < 50; ++d) differ += s.pick(1, d, 1 << 20) != s.pick(2, d, 1 << 20);
  EXPECT_GT(differ, 40);
}

TEST(FullPass, ReproducesExactCounts) {
  const ExhaustiveWedgeSampler full;
  for (const auto& g : small_graphs()) {
    const auto truth = exact(g);
    for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced}) {
      const auto est = estimate(g, config(mode, 16), ParallelPlan(), &full);
      EXPECT_TRUE((est.estimates == truth).all()) << to_string(mode);
    }
  }
}

TEST(FullPass, ParallelToo) {
  const ExhaustiveWedgeSampler full;
  const auto g = random_hypergraph(40, 60, 1, 6, 0.3, 5).graph;
  const auto truth = exact(g);
  for (unsigned w : {2u, 8u})
    for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced})
      EXPECT_TRUE((estimate(g, config(mode, 3), ParallelPlan(w), &full).estimates == truth).all());
}

TEST(Estimate, CoauthorshipUsesOnlyTheIntersectionPool) {
  const auto est = estimate_adv(fixtures::fig6(), config(EstimatorMode::advanced, 50));
  ASSERT_EQ(est.pools.size(), 4u);
  EXPECT_EQ(est.pools[0].budget, 50u);
  EXPECT_EQ(est.pools[0].draws, 50u);
  for (int p = 1; p <= 3; ++p) EXPECT_EQ(est.pools[p].draws, 0u);
  EXPECT_EQ(est.estimates.head(8).abs().sum(), 0.0);
  EXPECT_GT(est.estimates.tail(12).sum(), 0.0);
}

TEST(Estimate, EmailMetadata) {
  const auto est = estimate_adv(fixtures::fig7(), config(EstimatorMode::advanced, 1000, 7));
  EXPECT_EQ(est.intersection_wedges, 3u);
  EXPECT_EQ(est.inclusion_wedges, 5u);
  EXPECT_EQ(est.wedges, 8u);
  std::uint64_t spent = 0;
  for (const auto& p : est.pools) spent += p.budget;
  EXPECT_EQ(spent, 1000u);
  EXPECT_TRUE(std::isfinite(est.total()));
}

TEST(Estimate, EmptyGraphWarns) {
  for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced}) {
    const auto est = estimate(Hypergraph(), config(mode, 10));
    EXPECT_TRUE(est.no_wedges);
    EXPECT_EQ(est.total(), 0.0);
  }
}

TEST(Estimate, InvalidConfig) {
  auto c = config(EstimatorMode::advanced, 10);
  c.sigma = 0;
  EXPECT_THROW(estimate(fixtures::fig6(), c), std::invalid_argument);
  c.sigma = 1.2;
  EXPECT_THROW(estimate(fixtures::fig6(), c), std::invalid_argument);
  c.sigma = 1;
  c.alpha = 0;
  EXPECT_THROW(estimate(fixtures::fig6(), c), std::invalid_argument);
}

TEST(Estimate, ClassFilterSpendsEverythingOnOnePool) {
  auto c = config(EstimatorMode::advanced, 512, 3);
  c.class_filter = PatternClass::TCC;
  const auto est = estimate_adv(fixtures::fig7(), c);
  EXPECT_EQ(est.pools[2].budget, 512u);
  EXPECT_EQ(est.pools[0].budget + est.pools[1].budget + est.pools[3].budget, 0u);
  EXPECT_EQ(est.total(), est.total(PatternClass::TCC));
}

TEST(Estimate, DeterministicAcrossRunsAndWorkers) {
  const auto g = random_hypergraph(40, 60, 1, 6, 0.3, 11).graph;
  for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced})
    for (double sigma : {1.0, 0.6}) {
      auto c = config(mode, 777, 19);
      c.sigma = sigma;
      const auto ref = estimate(g, c);
      for (unsigned w : {1u, 2u, 8u}) {
        const auto got = estimate(g, c, ParallelPlan(w));
        EXPECT_TRUE((got.estimates == ref.estimates).all());
        EXPECT_EQ(got.sampled_edges, ref.sampled_edges);
      }
    }
}

TEST(Estimate, SubsampledGraphIsScaled) {
  const auto g = random_hypergraph(40, 60, 1, 6, 0.3, 12).graph;
  auto c = config(EstimatorMode::advanced, 500, 2);
  c.sigma = 0.5;
  const auto est = estimate(g, c);
  EXPECT_EQ(est.sampled_edges, sub_hypergraph_size(g.edge_count(), 0.5));
  const ExhaustiveWedgeSampler full;
  const auto sub = sample_sub_hypergraph(g, 0.5, 2);
  const auto sub_exact = count_all_adv(preprocess(sub)).slots().cast<double>();
  const auto scaled = estimate(g, c, ParallelPlan(), &full);
  EXPECT_TRUE(((scaled.estimates - sub_exact * 8.0).abs() < 1e-9).all());
}

TEST(Estimate, MeanNearExactOnEmail) {
  // Smaller than the acceptance sweep: 300 seeds.
  const auto g = fixtures::fig7();
  for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced}) {
    auto c = config(mode, 200, 100);
    const auto prof = variance_diagnostic(g, c, 300);
    const double se = std::sqrt(prof.variance(4) / 300);
    EXPECT_NEAR(prof.mean(4), 3.0, 3 * se + 1e-12) << to_string(mode);
  }
}

TEST(Variance, SingleRunIsZero) {
  const auto prof = variance_diagnostic(fixtures::fig7(), config(EstimatorMode::basic, 20, 5), 1);
  EXPECT_EQ(prof.runs, 1);
  EXPECT_TRUE((prof.variance == 0).all());
  const auto one = estimate_basic(fixtures::fig7(), config(EstimatorMode::basic, 20, 5));
  EXPECT_TRUE((prof.mean == one.estimates).all());
}

TEST(Variance, ExhaustiveRunsHaveZeroVariance) {
  const ExhaustiveWedgeSampler full;
  const auto g = random_hypergraph(30, 50, 1, 5, 0.3, 8).graph;
  for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced}) {
    const auto prof = variance_diagnostic(g, config(mode, 5), 20, ParallelPlan(), &full);
    EXPECT_TRUE((prof.variance == 0).all());
    EXPECT_TRUE((prof.mean == prof.exact).all());
    for (double v : prof.class_variance) EXPECT_EQ(v, 0.0);
  }
}

TEST(Variance, PairCounters) {
  const auto prof = variance_diagnostic(fixtures::fig6(), config(EstimatorMode::basic, 5), 2);
  EXPECT_EQ(prof.gamma(9), 10.0);  // C(5,2) pattern-10 pairs
  EXPECT_EQ(prof.gamma(11), 1.0);  // C(2,2) pattern-12 pairs
  EXPECT_EQ(prof.exact(9), 5.0);
  EXPECT_EQ(prof.class_exact[3], 7.0);

  // Pairs sharing a wedge, recounted from the oracle's triangles.
  const auto g = random_hypergraph(25, 45, 1, 5, 0.3, 31).graph;
  std::map<std::tuple<EdgeId, EdgeId, int>, double> per_wedge;
  for (const auto& t : oracle::all(g).triangles) {
    const auto& e = t.edges;
    ++per_wedge[{e[0], e[1], t.pattern}];
    ++per_wedge[{e[0], e[2], t.pattern}];
    ++per_wedge[{e[1], e[2], t.pattern}];
  }
  PatternArray<double> expected = PatternArray<double>::Zero();
  for (const auto& [key, n] : per_wedge) expected(std::get<2>(key) - 1) += n * (n - 1) / 2;
  const auto p2 = variance_diagnostic(g, config(EstimatorMode::basic, 5), 1);
  EXPECT_TRUE((p2.gamma_prime == expected).all());
}

TEST(Variance, DoublingSamplesDoesNotIncreaseVariance) {
  const auto g = fixtures::fig7();
  for (auto mode : {EstimatorMode::basic, EstimatorMode::advanced}) {
    const auto a = variance_diagnostic(g, config(mode, 100, 500), 400);
    const auto b = variance_diagnostic(g, config(mode, 200, 900), 400);
    const double se_a = std::sqrt(a.class_variance[1] / 400);
    const double se_b = std::sqrt(b.class_variance[1] / 400);
    EXPECT_NEAR(a.class_mean[1], b.class_mean[1], 4 * std::hypot(se_a, se_b));
    // Halving is expected; 1.3 leaves room for noise across 400 runs.
    EXPECT_LE(b.class_variance[1], 1.3 * a.class_variance[1]) << to_string(mode);
  }
}
