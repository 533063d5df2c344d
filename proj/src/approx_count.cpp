#include "hypertri/approx_count.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "hypertri/exact_count.hpp"

namespace hypertri {

std::string_view to_string(EstimatorMode m) {
  return m == EstimatorMode::basic ? "basic" : "adv";
}

void EstimateConfig::validate() const {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw std::invalid_argument("sigma must lie in (0, 1]");
  if (alpha < 1) throw std::invalid_argument("sample count must be at least 1");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t UniformWedgeSampler::pick(unsigned stream, std::uint64_t draw,
                                        std::uint64_t pool) const {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed_) + stream) + draw);
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(h) * pool) >> 64);
}

SampleBudget split_sample_budget(std::uint64_t t, std::uint64_t c, std::uint64_t alpha) {
  SampleBudget out{};
  const std::uint64_t w = t + c;
  if (w == 0) return out;
  using U = unsigned __int128;
  const U weight[4] = {U(t) * t, U(c) * c, U(t) * c, U(t) * c};
  const U denom = U(w) * w;
  std::uint64_t used = 0;
  std::size_t largest = 0;
  for (std::size_t p = 0; p < 4; ++p) {
    out[p] = static_cast<std::uint64_t>(weight[p] * alpha / denom);
    used += out[p];
    if (weight[p] > weight[largest]) largest = p;
  }
  out[largest] += alpha - used;
  for (std::size_t p = 0; p < 4; ++p) {
    if (weight[p] == 0 || out[p] > 0) continue;
    out[p] = 1;
    if (out[largest] > 1) --out[largest];
  }
  return out;
}

SampleBudget split_sample_budget(const WedgeIndex& index, std::uint64_t alpha) {
  return split_sample_budget(index.intersection_count(), index.inclusion_count(), alpha);
}

namespace {

using Kernel = std::function<void(WedgeId, TriangleCollector&)>;

// Raw tallies of `draws` draws from wedge ids [offset, offset + pool).
PatternCounts sample_pool(const ParallelPlan& plan, const WedgeSampler& sampler,
                          unsigned stream, WedgeId offset, std::uint64_t pool,
                          std::uint64_t draws, const Kernel& kernel) {
  std::vector<PatternCounts> partial(plan.workers);
  run_chunks(plan, draws, [&](unsigned c, std::size_t b, std::size_t e) {
    TriangleCollector out;
    for (std::size_t d = b; d < e; ++d)
      kernel(static_cast<WedgeId>(offset + sampler.pick(stream, d, pool)), out);
    partial[c] = out.counts();
  });
  PatternCounts total;
  for (const auto& p : partial) total += p;
  return total;
}

double scale(std::uint64_t pool, std::uint64_t draws, double sigma) {
  if (draws == 0) return 0.0;
  return static_cast<double>(pool) / static_cast<double>(draws) / (sigma * sigma * sigma);
}

void keep_class(PatternArray<double>& est, std::optional<PatternClass> cls) {
  if (!cls) return;
  const auto [lo, hi] = class_range(*cls);
  for (int p = 1; p <= kPatternCount; ++p)
    if (p < lo || p > hi) est(p - 1) = 0.0;
}

EstimatedCounts run_on_index(const WedgeIndex& index, const EstimateConfig& cfg,
                             EstimatorMode mode, const ParallelPlan& plan,
                             const WedgeSampler* sampler) {
  cfg.validate();
  const UniformWedgeSampler uniform(cfg.seed);
  const WedgeSampler& s = sampler ? *sampler : uniform;

  EstimatedCounts r;
  r.mode = mode;
  r.sigma = cfg.sigma;
  r.alpha = cfg.alpha;
  r.seed = cfg.seed;
  r.class_filter = cfg.class_filter;
  r.sampled_edges = index.edge_count();
  r.wedges = index.size();
  r.intersection_wedges = index.intersection_count();
  r.inclusion_wedges = index.inclusion_count();
  r.no_wedges = index.size() == 0;

  if (mode == EstimatorMode::basic) {
    PoolRun pool{"all", r.wedges, cfg.alpha, 0};
    if (!r.no_wedges) {
      pool.draws = s.draws(pool.pool_size, pool.budget);
      const auto raw = sample_pool(plan, s, 0, 0, pool.pool_size, pool.draws,
                                   [&](WedgeId w, TriangleCollector& out) {
                                     count_min_order_at(index, w, out);
                                   });
      r.estimates = raw.slots().cast<double>() * scale(pool.pool_size, pool.draws, cfg.sigma);
      keep_class(r.estimates, cfg.class_filter);
    }
    r.pools.push_back(pool);
    return r;
  }

  struct PoolKind {
    std::string_view name;
    PatternClass cls;
    bool intersection;
    Kernel kernel;
  };
  const PoolKind kinds[4] = {
      {"TTT", PatternClass::TTT, true,
       [&](WedgeId w, TriangleCollector& out) { count_ttt_at(index, w, TttFilter::all, out); }},
      {"CCC", PatternClass::CCC, false,
       [&](WedgeId w, TriangleCollector& out) { count_ccc_at(index, w, out); }},
      {"TCC", PatternClass::TCC, true,
       [&](WedgeId w, TriangleCollector& out) { count_tcc_at(index, w, out); }},
      {"TTC", PatternClass::TTC, false,
       [&](WedgeId w, TriangleCollector& out) { count_ttc_at(index, w, out); }},
  };

  SampleBudget budget{};
  if (cfg.class_filter) {
    for (std::size_t p = 0; p < 4; ++p)
      if (kinds[p].cls == *cfg.class_filter) budget[p] = cfg.alpha;
  } else {
    budget = split_sample_budget(index, cfg.alpha);
  }

  for (std::size_t p = 0; p < 4; ++p) {
    const auto& kind = kinds[p];
    PoolRun pool{kind.name, kind.intersection ? r.intersection_wedges : r.inclusion_wedges,
                 budget[p], 0};
    if (pool.pool_size > 0 && pool.budget > 0) {
      pool.draws = s.draws(pool.pool_size, pool.budget);
      const WedgeId offset = kind.intersection ? 0 : index.inclusion_begin();
      const auto raw = sample_pool(plan, s, static_cast<unsigned>(p + 1), offset,
                                   pool.pool_size, pool.draws, kind.kernel);
      const double f = scale(pool.pool_size, pool.draws, cfg.sigma);
      const auto [lo, hi] = class_range(kind.cls);
      for (int q = lo; q <= hi; ++q) r.estimates(q - 1) = static_cast<double>(raw.at(q)) * f;
    }
    r.pools.push_back(pool);
  }
  return r;
}

EstimatedCounts run(const Hypergraph& g, const EstimateConfig& cfg, EstimatorMode mode,
                    const ParallelPlan& plan, const WedgeSampler* sampler) {
  cfg.validate();
  const std::size_t keep = sub_hypergraph_size(g.edge_count(), cfg.sigma);
  if (keep == g.edge_count())
    return run_on_index(parallel_preprocess(g, plan), cfg, mode, plan, sampler);
  const Hypergraph sub = sample_sub_hypergraph(g, cfg.sigma, cfg.seed);
  return run_on_index(parallel_preprocess(sub, plan), cfg, mode, plan, sampler);
}

}  // namespace

EstimatedCounts estimate_basic(const Hypergraph& g, const EstimateConfig& cfg,
                               const ParallelPlan& plan, const WedgeSampler* sampler) {
  return run(g, cfg, EstimatorMode::basic, plan, sampler);
}

EstimatedCounts estimate_adv(const Hypergraph& g, const EstimateConfig& cfg,
                             const ParallelPlan& plan, const WedgeSampler* sampler) {
  return run(g, cfg, EstimatorMode::advanced, plan, sampler);
}

EstimatedCounts estimate(const Hypergraph& g, const EstimateConfig& cfg,
                         const ParallelPlan& plan, const WedgeSampler* sampler) {
  return run(g, cfg, cfg.mode, plan, sampler);
}

EstimatedCounts estimate_on_index(const WedgeIndex& index, const EstimateConfig& cfg,
                                  const ParallelPlan& plan, const WedgeSampler* sampler) {
  return run_on_index(index, cfg, cfg.mode, plan, sampler);
}

VarianceProfile variance_diagnostic(const Hypergraph& g, const EstimateConfig& cfg, int runs,
                                    const ParallelPlan& plan, const WedgeSampler* sampler) {
  cfg.validate();
  if (runs < 1) throw std::invalid_argument("run count must be at least 1");
  VarianceProfile out;
  out.runs = runs;

  const WedgeIndex full = preprocess(g);
  // Pattern tallies per wedge, for pairs sharing a wedge.
  std::unordered_map<std::uint64_t, std::uint64_t> per_wedge;
  const auto exact = count_all_adv(full, [&](const Triangle& t) {
    const auto& e = t.edges;
    const std::pair<EdgeId, EdgeId> pairs[3] = {{e[0], e[1]}, {e[0], e[2]}, {e[1], e[2]}};
    for (const auto& [a, b] : pairs) {
      const Hyperwedge* w = full.find(a, b);
      const auto id = static_cast<std::uint64_t>(w - full.wedges().data());
      ++per_wedge[id * kPatternCount + static_cast<std::uint64_t>(t.pattern.slot())];
    }
  });
  out.exact = exact.slots().cast<double>();
  for (int s = 0; s < kPatternCount; ++s) {
    const double h = out.exact(s);
    out.gamma(s) = h * (h - 1) / 2;
  }
  for (const auto& [key, n] : per_wedge)
    out.gamma_prime(static_cast<int>(key % kPatternCount)) +=
        static_cast<double>(n) * static_cast<double>(n - 1) / 2;

  // Reuse the index of G when every run keeps all hyperedges.
  const bool whole = sub_hypergraph_size(g.edge_count(), cfg.sigma) == g.edge_count();
  // Welford updates: identical runs give a variance of exactly 0.
  PatternArray<double> m2 = PatternArray<double>::Zero();
  std::array<double, 4> cm2{};
  for (int r = 0; r < runs; ++r) {
    EstimateConfig c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(r);
    const auto est = whole ? estimate_on_index(full, c, plan, sampler) : estimate(g, c, plan, sampler);
    const double n = r + 1;
    const PatternArray<double> delta = est.estimates - out.mean;
    out.mean += delta / n;
    m2 += delta * (est.estimates - out.mean);
    for (int k = 0; k < 4; ++k) {
      const double v = est.total(static_cast<PatternClass>(k));
      const double d = v - out.class_mean[k];
      out.class_mean[k] += d / n;
      cm2[k] += d * (v - out.class_mean[k]);
    }
  }
  if (runs > 1) {
    out.variance = (m2 / (runs - 1)).max(0.0);
    for (int k = 0; k < 4; ++k) out.class_variance[k] = std::max(0.0, cm2[k] / (runs - 1));
  }
  for (int k = 0; k < 4; ++k)
    out.class_exact[k] = static_cast<double>(exact.total(static_cast<PatternClass>(k)));
  return out;
}

}  // namespace hypertri
