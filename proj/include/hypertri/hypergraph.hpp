#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hypertri {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Bidirectional mapping between external vertex labels and dense ids.
class LabelMap {
 public:
  /// Returns the id for `label`, assigning the next dense id on first sight.
  VertexId intern(const std::string& label);
  std::optional<VertexId> find(const std::string& label) const;
  const std::string& label(VertexId id) const { return labels_.at(id); }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
};

/// Counters collected while normalizing raw input into a Hypergraph.
struct IngestReport {
  std::size_t duplicates_dropped = 0;
  std::size_t duplicate_vertices_collapsed = 0;
  std::size_t empty_lines_skipped = 0;
  std::size_t comment_lines_skipped = 0;
};

/// Immutable hypergraph stored in compressed form.
///
/// Hyperedges are strictly increasing vertex lists with pairwise distinct
/// vertex sets. For every vertex the incidence list E_v holds the ids of the
/// hyperedges containing it, in ascending order.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Normalizes raw vertex lists: sorts each list, collapses repeated
  /// vertices and drops hyperedges whose vertex set was already seen.
  /// Throws std::invalid_argument for empty hyperedges or ids outside
  /// [0, vertex_count).
  static Hypergraph from_edges(std::vector<std::vector<VertexId>> edges,
                               std::size_t vertex_count,
                               IngestReport* report = nullptr,
                               std::optional<LabelMap> labels = std::nullopt);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_offsets_.size() - 1; }
  bool empty() const { return edge_count() == 0; }

  std::span<const VertexId> edge(EdgeId e) const {
    return {edge_vertices_.data() + edge_offsets_[e],
            edge_vertices_.data() + edge_offsets_[e + 1]};
  }
  std::size_t edge_size(EdgeId e) const {
    return edge_offsets_[e + 1] - edge_offsets_[e];
  }
  std::span<const EdgeId> incidence(VertexId v) const {
    return {incident_edges_.data() + incidence_offsets_[v],
            incident_edges_.data() + incidence_offsets_[v + 1]};
  }

  /// Sum of hyperedge cardinalities.
  std::size_t total_edge_size() const { return edge_vertices_.size(); }
  std::size_t max_edge_size() const;

  const std::optional<LabelMap>& labels() const { return labels_; }

  /// Hyperedges as vectors, mostly for tests and serialization.
  std::vector<std::vector<VertexId>> edge_lists() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> edge_vertices_;
  std::vector<std::size_t> incidence_offsets_{0};
  std::vector<EdgeId> incident_edges_;
  std::optional<LabelMap> labels_;
};

// ---------------------------------------------------------------------------
// Input / output

enum class InputFormat { edge_list, simplex_list };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LoadResult {
  Hypergraph graph;
  IngestReport report;
};

/// One hyperedge per line, tokens separated by spaces or tabs. Lines that
/// start with '#' and blank lines are skipped. Tokens are arbitrary labels
/// mapped to dense ids in first-appearance order.
LoadResult load_edge_list(std::istream& in);

/// Two-stream corpus format: hyperedge sizes, then the flat vertex list.
LoadResult load_simplex_list(std::istream& nverts, std::istream& simplices);

/// For `simplex_list`, `path` is the common prefix: `<path>-nverts.txt` and
/// `<path>-simplices.txt`. Throws std::system_error when a file cannot be
/// opened.
LoadResult load_hypergraph(const std::filesystem::path& path, InputFormat format);

/// Writes the edge-list format, using labels when the graph carries them.
void write_edge_list(std::ostream& out, const Hypergraph& g);

// ---------------------------------------------------------------------------
// Generation and sub-sampling

struct GeneratedHypergraph {
  Hypergraph graph;
  /// Set when fewer distinct hyperedges than requested could be produced.
  bool truncated = false;
};

/// Seeded random hypergraph over vertices [0, num_vertices). With
/// probability `inclusion_bias` a new hyperedge is drawn as a strict subset
/// of an earlier hyperedge of size >= 2.
GeneratedHypergraph random_hypergraph(std::size_t num_vertices,
                                      std::size_t num_edges,
                                      std::size_t min_size,
                                      std::size_t max_size,
                                      double inclusion_bias,
                                      std::uint64_t seed);

/// Number of hyperedges kept for a sampling proportion: round-half-up of
/// sigma * |E|, at least 1 when |E| > 0.
std::size_t sub_hypergraph_size(std::size_t edge_count, double sigma);

/// Uniform selection of sub_hypergraph_size(|E|, sigma) hyperedges without
/// replacement. Selected hyperedges keep their relative order; vertex ids are
/// re-densified in first-appearance order. sigma == 1 returns a copy of g.
Hypergraph sample_sub_hypergraph(const Hypergraph& g, double sigma,
                                 std::uint64_t seed);

}  // namespace hypertri
