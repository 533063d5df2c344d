#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hypertri/hypergraph.hpp"

namespace hypertri {

/// Global wedge handle. Intersection wedges occupy [0, |⋀^t|) and inclusion
/// wedges [|⋀^t|, |⋀|); within each block ids follow the wedge order.
using WedgeId = std::uint32_t;

enum class WedgeKind : std::uint8_t { intersection, inclusion };

/// A pair of hyperedges sharing at least one vertex.
///
/// Intersection wedges store the smaller hyperedge id first. Inclusion
/// wedges store the container (the larger hyperedge) first.
struct Hyperwedge {
  EdgeId first = 0;
  EdgeId second = 0;
  WedgeKind kind = WedgeKind::intersection;
  std::uint32_t common_size = 0;
  std::uint64_t common_offset = 0;
};

/// Wedge order: lexicographic on the stored (first, second) tuple.
inline bool wedge_order_less(const Hyperwedge& a, const Hyperwedge& b) {
  return a.first != b.first ? a.first < b.first : a.second < b.second;
}

/// Which stored slot a hyperedge occupies in a wedge.
enum class WedgePosition : std::uint8_t { first, second, any };

/// Either wedge kind, for queries.
enum class KindFilter : std::uint8_t { intersection, inclusion, any };

struct WedgeBatch;

/// A neighbouring hyperedge together with the wedge joining it.
struct Neighbor {
  EdgeId edge;
  WedgeId wedge;
};

/// All hyperwedges of a hypergraph with their common-vertex sets, plus
/// per-hyperedge views.
class WedgeIndex {
 public:
  WedgeIndex() = default;

  std::size_t size() const { return wedges_.size(); }
  std::size_t intersection_count() const { return intersection_count_; }
  std::size_t inclusion_count() const { return wedges_.size() - intersection_count_; }

  const Hyperwedge& wedge(WedgeId id) const { return wedges_[id]; }
  std::span<const Hyperwedge> wedges() const { return wedges_; }
  std::span<const Hyperwedge> intersection_wedges() const {
    return std::span(wedges_).first(intersection_count_);
  }
  std::span<const Hyperwedge> inclusion_wedges() const {
    return std::span(wedges_).subspan(intersection_count_);
  }
  WedgeId inclusion_begin() const { return static_cast<WedgeId>(intersection_count_); }

  std::span<const VertexId> common(const Hyperwedge& w) const {
    return {common_pool_.data() + w.common_offset, w.common_size};
  }
  std::span<const VertexId> common(WedgeId id) const { return common(wedges_[id]); }

  /// Total stored common-vertex entries, i.e. the sum of all ω.
  std::size_t common_entries() const { return common_pool_.size(); }

  std::size_t edge_count() const { return edge_sizes_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_size(EdgeId e) const { return edge_sizes_[e]; }

  /// Wedge ids of one kind in which `e` sits at `position` (first or
  /// second), ascending in wedge order.
  std::span<const WedgeId> incident(EdgeId e, WedgeKind kind,
                                    WedgePosition position) const;

  /// Every neighbour of `e`, ascending by neighbour id.
  std::span<const Neighbor> neighbors(EdgeId e) const {
    return {neighbors_.data() + neighbor_offsets_[e],
            neighbors_.data() + neighbor_offsets_[e + 1]};
  }

  /// Wedge joining `a` and `b`, or nullptr when they are disjoint.
  const Hyperwedge* find(EdgeId a, EdgeId b) const;

 private:
  friend WedgeIndex assemble_wedge_index(const Hypergraph&,
                                         std::vector<WedgeBatch>);

  std::vector<Hyperwedge> wedges_;
  std::size_t intersection_count_ = 0;
  std::vector<VertexId> common_pool_;
  std::vector<std::uint32_t> edge_sizes_;
  std::size_t vertex_count_ = 0;

  // Four CSR lists: [kind][position].
  std::vector<std::size_t> incident_offsets_[2][2];
  std::vector<WedgeId> incident_[2][2];

  std::vector<std::size_t> neighbor_offsets_{0};
  std::vector<Neighbor> neighbors_;
};

/// Builds the wedge index sequentially. Equivalent to
/// parallel_preprocess with one worker.
WedgeIndex preprocess(const Hypergraph& g);

/// Wedges of the requested kind containing `e` in the requested position,
/// ascending in wedge order.
std::vector<Hyperwedge> wedges_containing(const WedgeIndex& index, EdgeId e,
                                          KindFilter kind,
                                          WedgePosition position);

/// Debug dump: one wedge per line, `first second kind ω`.
void dump_wedges(std::ostream& out, const WedgeIndex& index);

const char* to_string(WedgeKind kind);

// ---------------------------------------------------------------------------
// Building blocks shared with the parallel builder.

/// Wedges discovered from their smaller-id member, before global ordering.
/// `common_offset` of each wedge indexes this batch's `pool`.
struct WedgeBatch {
  std::vector<Hyperwedge> wedges;
  std::vector<VertexId> pool;
};

/// Discovers wedges {i, j} with i in [begin, end) and j > i, in ascending
/// (i, j) order.
WedgeBatch discover_wedges(const Hypergraph& g, EdgeId begin, EdgeId end);

/// Merges batches (in the given order), sorts each kind by wedge order and
/// builds every per-edge view.
WedgeIndex assemble_wedge_index(const Hypergraph& g,
                                std::vector<WedgeBatch> batches);

}  // namespace hypertri
