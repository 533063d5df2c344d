#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "hypertri/hypergraph.hpp"
#include "hypertri/pattern_counts.hpp"
#include "hypertri/wedge_index.hpp"

namespace hypertri {

/// A hyper-triangle with its hyperedge ids in ascending order.
struct Triangle {
  std::array<EdgeId, 3> edges;
  PatternId pattern;

  bool operator==(const Triangle&) const = default;
};

Triangle make_triangle(EdgeId a, EdgeId b, EdgeId c, PatternId p);

/// Receives every enumerated triangle exactly once.
using TriangleSink = std::function<void(const Triangle&)>;

/// Counting routines. `baseline` enumerates neighbour pairs per hyperedge;
/// the rest walk the wedge index.
enum class Algorithm {
  baseline,
  ccc,
  tcc,
  ttc,
  ttt,
  dense_ttt,
  sparse_ttt,
  all_adv,
};

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Tallies triangles and forwards them to a sink or a buffer.
class TriangleCollector {
 public:
  TriangleCollector() = default;
  explicit TriangleCollector(const TriangleSink* sink) : sink_(sink && *sink ? sink : nullptr) {}
  explicit TriangleCollector(std::vector<Triangle>* buffer) : buffer_(buffer) {}

  void emit(EdgeId a, EdgeId b, EdgeId c, PatternId p) {
    counts_.add(p);
    if (sink_ == nullptr && buffer_ == nullptr) return;
    const auto t = make_triangle(a, b, c, p);
    if (sink_) (*sink_)(t);
    if (buffer_) buffer_->push_back(t);
  }

  const PatternCounts& counts() const { return counts_; }

 private:
  PatternCounts counts_;
  const TriangleSink* sink_ = nullptr;
  std::vector<Triangle>* buffer_ = nullptr;
};

/// Per-vertex lists τ_v of intersection wedges whose common set holds v,
/// ascending in wedge order.
class TauLists {
 public:
  TauLists() = default;
  explicit TauLists(const WedgeIndex& index);
  std::span<const WedgeId> operator[](VertexId v) const {
    return {ids_.data() + offsets_[v], ids_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<WedgeId> ids_;
};

/// Read-only state shared by all workers of one counting run.
struct CountContext {
  const WedgeIndex* index = nullptr;
  const Hypergraph* graph = nullptr;  // baseline only
  const TauLists* tau = nullptr;      // dense_ttt only
};

/// Size of the anchor collection an algorithm iterates: hyperedges for the
/// baseline, intersection wedges for TCC and TTT variants, inclusion wedges
/// for CCC and TTC, every wedge for all_adv.
std::size_t anchor_count(Algorithm algo, const CountContext& ctx);

/// Runs `algo` over anchors [begin, end) of its collection.
void count_range(Algorithm algo, const CountContext& ctx, std::size_t begin,
                 std::size_t end, TriangleCollector& out);

// ---------------------------------------------------------------------------
// Single-anchor kernels. Each counts the triangles attributed to one anchor:
// CCC at the (top container, middle) wedge, TCC at the unique intersection
// wedge, TTC at the unique inclusion wedge, TTT at the order-minimal wedge.

enum class TttFilter { all, dense, sparse };

void count_ttt_at(const WedgeIndex& index, WedgeId anchor, TttFilter filter,
                  TriangleCollector& out);
void count_ccc_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out);
void count_tcc_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out);
void count_ttc_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out);

/// Triangles of any class whose order-minimal wedge (over stored tuples of
/// both kinds) is `anchor`.
void count_min_order_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out);

// ---------------------------------------------------------------------------
// Whole-graph counters (sequential).

PatternCounts count_baseline(const Hypergraph& g, const WedgeIndex& index,
                             const TriangleSink& sink = {});
PatternCounts count_ccc(const WedgeIndex& index, const TriangleSink& sink = {});
PatternCounts count_tcc(const WedgeIndex& index, const TriangleSink& sink = {});
PatternCounts count_ttc(const WedgeIndex& index, const TriangleSink& sink = {});
PatternCounts count_ttt(const WedgeIndex& index, const TriangleSink& sink = {});
PatternCounts count_dense_ttt(const WedgeIndex& index, const TriangleSink& sink = {});
PatternCounts count_sparse_ttt(const WedgeIndex& index, const TriangleSink& sink = {});
PatternCounts count_all_adv(const WedgeIndex& index, const TriangleSink& sink = {});

/// Σ_e C(|N_e|, 2): every (centre, unordered neighbour pair) combination.
std::uint64_t neighbor_pair_sum(const WedgeIndex& index);

/// Open hyper-triangles (2-paths whose ends are disjoint), given the closed
/// tallies of the same hypergraph.
std::uint64_t count_open_triangles(const WedgeIndex& index, const PatternCounts& closed);
std::uint64_t count_open_triangles(const WedgeIndex& index);

}  // namespace hypertri
