#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hypertri/hypergraph.hpp"
#include "hypertri/parallel.hpp"
#include "hypertri/pattern_counts.hpp"
#include "hypertri/wedge_index.hpp"

namespace hypertri {

enum class EstimatorMode { basic, advanced };

std::string_view to_string(EstimatorMode m);

struct EstimateConfig {
  double sigma = 1.0;       // fraction of hyperedges kept in G'
  std::uint64_t alpha = 1;  // total wedge draws
  std::uint64_t seed = 0;
  std::optional<PatternClass> class_filter;
  EstimatorMode mode = EstimatorMode::advanced;

  /// Throws std::invalid_argument unless sigma ∈ (0, 1] and alpha ≥ 1.
  void validate() const;
};

/// Source of wedge draws. Draw `d` of stream `s` is a pure function of
/// (s, d), so any split of the draws across workers sees the same wedges.
class WedgeSampler {
 public:
  virtual ~WedgeSampler() = default;
  /// Draws actually taken from a pool of `pool` wedges given `budget`.
  virtual std::uint64_t draws(std::uint64_t pool, std::uint64_t budget) const = 0;
  /// Position in [0, pool) of draw `draw` in stream `stream`.
  virtual std::uint64_t pick(unsigned stream, std::uint64_t draw,
                             std::uint64_t pool) const = 0;
};

/// Uniform draws with replacement, counter-based.
class UniformWedgeSampler final : public WedgeSampler {
 public:
  explicit UniformWedgeSampler(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t draws(std::uint64_t, std::uint64_t budget) const override { return budget; }
  std::uint64_t pick(unsigned stream, std::uint64_t draw, std::uint64_t pool) const override;

 private:
  std::uint64_t seed_;
};

/// Visits every wedge of the pool exactly once, ignoring the budget.
class ExhaustiveWedgeSampler final : public WedgeSampler {
 public:
  std::uint64_t draws(std::uint64_t pool, std::uint64_t) const override { return pool; }
  std::uint64_t pick(unsigned, std::uint64_t draw, std::uint64_t) const override { return draw; }
};

/// splitmix64 finaliser.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-class draw budgets: [0] TTT and [2] TCC over intersection wedges,
/// [1] CCC and [3] TTC over inclusion wedges.
using SampleBudget = std::array<std::uint64_t, 4>;

/// Budgets proportional to t², c², tc, tc (t, c = wedge counts per kind),
/// floored, with the remainder given to the largest one (lowest index on
/// ties). A pool with wedges and a positive share never gets 0; the draw it
/// needs is taken from the largest budget while that stays ≥ 1.
SampleBudget split_sample_budget(std::uint64_t intersection, std::uint64_t inclusion,
                                 std::uint64_t alpha);
SampleBudget split_sample_budget(const WedgeIndex& index, std::uint64_t alpha);

/// One sampled pool of a run.
struct PoolRun {
  std::string_view name;  // "all", "TTT", "CCC", "TCC", "TTC"
  std::uint64_t pool_size = 0;
  std::uint64_t budget = 0;
  std::uint64_t draws = 0;
};

struct EstimatedCounts {
  PatternArray<double> estimates = PatternArray<double>::Zero();
  EstimatorMode mode = EstimatorMode::advanced;
  double sigma = 1.0;
  std::uint64_t alpha = 0;
  std::uint64_t seed = 0;
  std::optional<PatternClass> class_filter;
  std::size_t sampled_edges = 0;  // |E'|
  std::uint64_t wedges = 0;
  std::uint64_t intersection_wedges = 0;
  std::uint64_t inclusion_wedges = 0;
  std::vector<PoolRun> pools;
  bool no_wedges = false;  // G' had no wedges; estimates are all zero

  double operator[](PatternId p) const { return estimates(p.slot()); }
  double total() const { return estimates.sum(); }
  double total(PatternClass cls) const { return class_total(estimates, cls); }
};

/// Uniform wedge sampling over all of G'. A sampled wedge counts the
/// triangles whose order-minimal wedge it is.
EstimatedCounts estimate_basic(const Hypergraph& g, const EstimateConfig& cfg,
                               const ParallelPlan& plan = ParallelPlan{},
                               const WedgeSampler* sampler = nullptr);

/// Class-specialised sampling with separate budgets per class.
EstimatedCounts estimate_adv(const Hypergraph& g, const EstimateConfig& cfg,
                             const ParallelPlan& plan = ParallelPlan{},
                             const WedgeSampler* sampler = nullptr);

/// Dispatches on cfg.mode.
EstimatedCounts estimate(const Hypergraph& g, const EstimateConfig& cfg,
                         const ParallelPlan& plan = ParallelPlan{},
                         const WedgeSampler* sampler = nullptr);

/// Runs the estimator of cfg.mode on an already built index, taken to be the
/// index of G'. Scaling still applies σ⁻³ from cfg.
EstimatedCounts estimate_on_index(const WedgeIndex& index, const EstimateConfig& cfg,
                                  const ParallelPlan& plan = ParallelPlan{},
                                  const WedgeSampler* sampler = nullptr);

/// Empirical behaviour of an estimator over repeated seeded runs.
///
/// gamma[p] is the number of unordered pairs of pattern-p triangles,
/// gamma_prime[p] the number of those pairs sharing a wedge (counted once
/// per shared wedge). Both are the quantities the variance of the estimators
/// depends on.
struct VarianceProfile {
  int runs = 0;
  PatternArray<double> mean = PatternArray<double>::Zero();
  PatternArray<double> variance = PatternArray<double>::Zero();
  PatternArray<double> exact = PatternArray<double>::Zero();
  std::array<double, 4> class_mean{};
  std::array<double, 4> class_variance{};
  std::array<double, 4> class_exact{};
  PatternArray<double> gamma = PatternArray<double>::Zero();
  PatternArray<double> gamma_prime = PatternArray<double>::Zero();
};

/// Runs the estimator `runs` times with seeds cfg.seed .. cfg.seed+runs-1.
/// Variances use the n-1 denominator; a single run reports 0.
VarianceProfile variance_diagnostic(const Hypergraph& g, const EstimateConfig& cfg, int runs,
                                    const ParallelPlan& plan = ParallelPlan{},
                                    const WedgeSampler* sampler = nullptr);

}  // namespace hypertri
