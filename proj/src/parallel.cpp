#include "hypertri/parallel.hpp"

#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>

namespace hypertri {

ParallelPlan::ParallelPlan(unsigned worker_count) : workers(worker_count) {
  if (worker_count == 0) throw std::invalid_argument("worker count must be at least 1");
}

std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t n,
                                                              unsigned chunks) {
  if (chunks == 0) throw std::invalid_argument("chunk count must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(chunks);
  const std::size_t base = n / chunks;
  const std::size_t extra = n % chunks;
  std::size_t begin = 0;
  for (unsigned c = 0; c < chunks; ++c) {
    const std::size_t len = base + (c < extra ? 1 : 0);
    out.emplace_back(begin, begin + len);
    begin += len;
  }
  return out;
}

void run_chunks(const ParallelPlan& plan, std::size_t n,
                const std::function<void(unsigned, std::size_t, std::size_t)>& fn) {
  const auto ranges = chunk_ranges(n, plan.workers);
  if (plan.workers == 1) {
    fn(0, ranges[0].first, ranges[0].second);
    return;
  }
  std::vector<std::exception_ptr> errors(plan.workers);
  std::vector<std::thread> threads;
  threads.reserve(plan.workers);
  for (unsigned c = 0; c < plan.workers; ++c) {
    threads.emplace_back([&, c] {
      try {
        fn(c, ranges[c].first, ranges[c].second);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

WedgeIndex parallel_preprocess(const Hypergraph& g, const ParallelPlan& plan) {
  if (plan.workers == 1) return preprocess(g);
  std::vector<WedgeBatch> batches(plan.workers);
  run_chunks(plan, g.edge_count(), [&](unsigned c, std::size_t b, std::size_t e) {
    batches[c] = discover_wedges(g, static_cast<EdgeId>(b), static_cast<EdgeId>(e));
  });
  return assemble_wedge_index(g, std::move(batches));
}

PatternCounts parallel_count(const WedgeIndex& index, Algorithm algo,
                             const ParallelPlan& plan, const TriangleSink& sink,
                             const Hypergraph* graph) {
  std::optional<TauLists> tau;
  if (algo == Algorithm::dense_ttt) tau.emplace(index);
  const CountContext ctx{&index, graph, tau ? &*tau : nullptr};
  const std::size_t n = anchor_count(algo, ctx);

  if (plan.workers == 1) {
    TriangleCollector out(&sink);
    count_range(algo, ctx, 0, n, out);
    return out.counts();
  }

  const bool buffered = static_cast<bool>(sink);
  std::vector<std::vector<Triangle>> buffers(plan.workers);
  std::vector<PatternCounts> partial(plan.workers);
  run_chunks(plan, n, [&](unsigned c, std::size_t b, std::size_t e) {
    TriangleCollector out = buffered ? TriangleCollector(&buffers[c]) : TriangleCollector();
    count_range(algo, ctx, b, e, out);
    partial[c] = out.counts();
  });

  PatternCounts total;
  for (unsigned c = 0; c < plan.workers; ++c) {
    total += partial[c];
    if (buffered)
      for (const auto& t : buffers[c]) sink(t);
  }
  return total;
}

}  // namespace hypertri
