#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "hypertri/exact_count.hpp"
#include "hypertri/hypergraph.hpp"
#include "hypertri/wedge_index.hpp"

namespace hypertri {

/// Static partition of an indexed work collection into contiguous chunks,
/// one per worker. Results are always merged in chunk order.
struct ParallelPlan {
  unsigned workers = 1;

  explicit ParallelPlan(unsigned worker_count = 1);
};

/// [begin, end) of each chunk. Chunk sizes differ by at most one; trailing
/// chunks are empty when there are more workers than items.
std::vector<std::pair<std::size_t, std::size_t>> chunk_ranges(std::size_t n,
                                                              unsigned chunks);

/// Calls fn(chunk, begin, end) for every chunk, one thread per chunk. With a
/// single worker the call happens on the calling thread. The first exception
/// thrown by any worker is rethrown after all workers finish.
void run_chunks(const ParallelPlan& plan, std::size_t n,
                const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

/// Same index as preprocess(g), wedge order included, for any worker count.
WedgeIndex parallel_preprocess(const Hypergraph& g, const ParallelPlan& plan);

/// Runs `algo` over its anchor collection split across workers. Counts are
/// slot-wise equal to the sequential counter. Triangles reach `sink` on the
/// calling thread, in chunk order. `graph` is required for the baseline.
PatternCounts parallel_count(const WedgeIndex& index, Algorithm algo,
                             const ParallelPlan& plan, const TriangleSink& sink = {},
                             const Hypergraph* graph = nullptr);

}  // namespace hypertri
