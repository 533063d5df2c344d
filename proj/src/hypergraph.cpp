#include "hypertri/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace hypertri {

namespace {

struct VertexListHash {
  std::size_t operator()(const std::vector<VertexId>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (VertexId x : v) {
      h ^= x;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ v.size());
  }
};

}  // namespace

VertexId LabelMap::intern(const std::string& label) {
  auto [it, inserted] =
      ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

std::optional<VertexId> LabelMap::find(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Hypergraph Hypergraph::from_edges(std::vector<std::vector<VertexId>> edges,
                                  std::size_t vertex_count,
                                  IngestReport* report,
                                  std::optional<LabelMap> labels) {
  IngestReport local;
  IngestReport& rep = report ? *report : local;

  Hypergraph g;
  g.vertex_count_ = vertex_count;
  g.labels_ = std::move(labels);

  std::unordered_set<std::vector<VertexId>, VertexListHash> seen;
  seen.reserve(edges.size());
  for (auto& e : edges) {
    if (e.empty()) throw std::invalid_argument("hyperedge must not be empty");
    std::sort(e.begin(), e.end());
    const auto last = std::unique(e.begin(), e.end());
    rep.duplicate_vertices_collapsed +=
        static_cast<std::size_t>(std::distance(last, e.end()));
    e.erase(last, e.end());
    if (e.back() >= vertex_count)
      throw std::invalid_argument("vertex id outside the vertex universe");
    if (!seen.insert(e).second) {
      ++rep.duplicates_dropped;
      continue;
    }
    g.edge_vertices_.insert(g.edge_vertices_.end(), e.begin(), e.end());
    g.edge_offsets_.push_back(g.edge_vertices_.size());
  }

  // Incidence lists by counting sort; scanning edges in id order keeps each
  // E_v ascending.
  std::vector<std::size_t> degree(vertex_count + 1, 0);
  for (VertexId v : g.edge_vertices_) ++degree[v + 1];
  for (std::size_t v = 0; v < vertex_count; ++v) degree[v + 1] += degree[v];
  g.incidence_offsets_ = degree;
  g.incident_edges_.resize(g.edge_vertices_.size());
  std::vector<std::size_t> cursor(degree.begin(), degree.end() - 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    for (VertexId v : g.edge(e)) g.incident_edges_[cursor[v]++] = e;
  return g;
}

std::size_t Hypergraph::max_edge_size() const {
  std::size_t best = 0;
  for (EdgeId e = 0; e < edge_count(); ++e)
    best = std::max(best, edge_size(e));
  return best;
}

std::vector<std::vector<VertexId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    auto span = edge(e);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

}  // namespace hypertri
