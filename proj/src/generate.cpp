#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "hypertri/hypergraph.hpp"

namespace hypertri {

namespace {

constexpr int kMaxRetriesPerEdge = 64;

}  // namespace

GeneratedHypergraph random_hypergraph(std::size_t num_vertices,
                                      std::size_t num_edges,
                                      std::size_t min_size,
                                      std::size_t max_size,
                                      double inclusion_bias,
                                      std::uint64_t seed) {
  if (min_size < 1 || min_size > max_size || max_size > num_vertices)
    throw std::invalid_argument("random_hypergraph: need 1 <= min <= max <= |V|");
  if (!(inclusion_bias >= 0.0 && inclusion_bias <= 1.0))
    throw std::invalid_argument("random_hypergraph: inclusion_bias must be in [0,1]");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::bernoulli_distribution nest(inclusion_bias);

  std::vector<VertexId> universe(num_vertices);
  std::iota(universe.begin(), universe.end(), VertexId{0});

  std::set<std::vector<VertexId>> seen;
  std::vector<std::vector<VertexId>> edges;
  std::vector<std::size_t> nestable;  // indices of edges with size >= 2

  for (std::size_t n = 0; n < num_edges; ++n) {
    for (int attempt = 0; attempt < kMaxRetriesPerEdge; ++attempt) {
      const std::size_t size = size_dist(rng);
      std::vector<VertexId> edge;
      if (!nestable.empty() && nest(rng)) {
        std::uniform_int_distribution<std::size_t> pick(0, nestable.size() - 1);
        const auto& parent = edges[nestable[pick(rng)]];
        const std::size_t k = std::min(size, parent.size() - 1);
        std::sample(parent.begin(), parent.end(), std::back_inserter(edge), k, rng);
      } else {
        std::sample(universe.begin(), universe.end(), std::back_inserter(edge),
                    size, rng);
      }
      std::sort(edge.begin(), edge.end());
      if (!seen.insert(edge).second) continue;
      if (edge.size() >= 2) nestable.push_back(edges.size());
      edges.push_back(std::move(edge));
      break;
    }
  }

  GeneratedHypergraph out;
  out.truncated = edges.size() < num_edges;
  out.graph = Hypergraph::from_edges(std::move(edges), num_vertices);
  return out;
}

std::size_t sub_hypergraph_size(std::size_t edge_count, double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0))
    throw std::invalid_argument("sigma must be in (0, 1]");
  if (edge_count == 0) return 0;
  const auto k = static_cast<std::size_t>(
      std::floor(sigma * static_cast<double>(edge_count) + 0.5));
  return std::clamp<std::size_t>(k, 1, edge_count);
}

Hypergraph sample_sub_hypergraph(const Hypergraph& g, double sigma,
                                 std::uint64_t seed) {
  const std::size_t k = sub_hypergraph_size(g.edge_count(), sigma);
  if (k == g.edge_count()) return g;

  std::vector<EdgeId> all(g.edge_count());
  std::iota(all.begin(), all.end(), EdgeId{0});
  std::vector<EdgeId> chosen;
  chosen.reserve(k);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(chosen), k, rng);
  std::sort(chosen.begin(), chosen.end());

  std::vector<VertexId> remap(g.vertex_count(), static_cast<VertexId>(-1));
  std::optional<LabelMap> labels;
  if (g.labels()) labels.emplace();
  VertexId next = 0;
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(k);
  for (EdgeId e : chosen) {
    std::vector<VertexId> edge;
    edge.reserve(g.edge_size(e));
    for (VertexId v : g.edge(e)) {
      if (remap[v] == static_cast<VertexId>(-1)) {
        remap[v] = next++;
        if (labels) labels->intern(g.labels()->label(v));
      }
      edge.push_back(remap[v]);
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph::from_edges(std::move(edges), next, nullptr, std::move(labels));
}

}  // namespace hypertri
