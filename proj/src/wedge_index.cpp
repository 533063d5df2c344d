#include "hypertri/wedge_index.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hypertri {

WedgeBatch discover_wedges(const Hypergraph& g, EdgeId begin, EdgeId end) {
  WedgeBatch batch;
  const std::size_t m = g.edge_count();
  std::vector<std::uint32_t> shared(m, 0);
  std::vector<std::size_t> cursor(m, 0);
  std::vector<EdgeId> touched;

  for (EdgeId i = begin; i < end; ++i) {
    const auto edge_i = g.edge(i);
    // Partner -> shared-vertex count, restricted to partners with a larger id.
    for (VertexId v : edge_i) {
      const auto inc = g.incidence(v);
      for (auto it = std::upper_bound(inc.begin(), inc.end(), i); it != inc.end(); ++it)
        if (shared[*it]++ == 0) touched.push_back(*it);
    }
    std::sort(touched.begin(), touched.end());

    std::size_t offset = batch.pool.size();
    for (EdgeId j : touched) {
      cursor[j] = offset;
      offset += shared[j];
    }
    batch.pool.resize(offset);
    for (VertexId v : edge_i) {
      const auto inc = g.incidence(v);
      for (auto it = std::upper_bound(inc.begin(), inc.end(), i); it != inc.end(); ++it)
        batch.pool[cursor[*it]++] = v;
    }

    const std::size_t size_i = edge_i.size();
    for (EdgeId j : touched) {
      const std::uint32_t omega = shared[j];
      const std::size_t size_j = g.edge_size(j);
      Hyperwedge w;
      w.common_size = omega;
      w.common_offset = cursor[j] - omega;
      if (omega == std::min(size_i, size_j)) {
        w.kind = WedgeKind::inclusion;
        // Strict inclusion: sizes differ because vertex sets are distinct.
        w.first = size_j > size_i ? j : i;
        w.second = size_j > size_i ? i : j;
      } else {
        w.kind = WedgeKind::intersection;
        w.first = i;
        w.second = j;
      }
      batch.wedges.push_back(w);
      shared[j] = 0;
    }
    touched.clear();
  }
  return batch;
}

WedgeIndex assemble_wedge_index(const Hypergraph& g,
                                std::vector<WedgeBatch> batches) {
  WedgeIndex index;
  const std::size_t m = g.edge_count();
  index.vertex_count_ = g.vertex_count();
  index.edge_sizes_.resize(m);
  for (EdgeId e = 0; e < m; ++e)
    index.edge_sizes_[e] = static_cast<std::uint32_t>(g.edge_size(e));

  // Gather with batch-relative offsets rewritten to a concatenated pool.
  std::vector<Hyperwedge> inter;
  std::vector<Hyperwedge> incl;
  std::vector<VertexId> staged;
  for (auto& b : batches) {
    const std::uint64_t base = staged.size();
    staged.insert(staged.end(), b.pool.begin(), b.pool.end());
    for (Hyperwedge w : b.wedges) {
      w.common_offset += base;
      (w.kind == WedgeKind::intersection ? inter : incl).push_back(w);
    }
    b = WedgeBatch{};
  }
  // Batches arrive in ascending smaller-id order, so `inter` is already
  // ordered; inclusion wedges may store the larger id first.
  std::sort(incl.begin(), incl.end(), wedge_order_less);

  if (inter.size() + incl.size() >
      static_cast<std::size_t>(std::numeric_limits<WedgeId>::max()))
    throw std::length_error("too many hyperwedges for 32-bit wedge ids");

  index.intersection_count_ = inter.size();
  index.wedges_ = std::move(inter);
  index.wedges_.insert(index.wedges_.end(), incl.begin(), incl.end());
  index.common_pool_.reserve(staged.size());
  for (Hyperwedge& w : index.wedges_) {
    const std::uint64_t at = index.common_pool_.size();
    index.common_pool_.insert(index.common_pool_.end(),
                              staged.begin() + static_cast<std::ptrdiff_t>(w.common_offset),
                              staged.begin() + static_cast<std::ptrdiff_t>(w.common_offset + w.common_size));
    w.common_offset = at;
  }

  // Per-edge incidence by kind and position. Scanning ids in order keeps
  // each list ascending in wedge order.
  for (int k = 0; k < 2; ++k)
    for (int p = 0; p < 2; ++p) {
      auto& offsets = index.incident_offsets_[k][p];
      offsets.assign(m + 1, 0);
      for (const auto& w : index.wedges_)
        if (static_cast<int>(w.kind) == k) ++offsets[(p == 0 ? w.first : w.second) + 1];
      for (std::size_t e = 0; e < m; ++e) offsets[e + 1] += offsets[e];
      auto& lists = index.incident_[k][p];
      lists.resize(offsets[m]);
      std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
      for (WedgeId id = 0; id < index.wedges_.size(); ++id) {
        const auto& w = index.wedges_[id];
        if (static_cast<int>(w.kind) == k) lists[fill[p == 0 ? w.first : w.second]++] = id;
      }
    }

  auto& offsets = index.neighbor_offsets_;
  offsets.assign(m + 1, 0);
  for (const auto& w : index.wedges_) {
    ++offsets[w.first + 1];
    ++offsets[w.second + 1];
  }
  for (std::size_t e = 0; e < m; ++e) offsets[e + 1] += offsets[e];
  index.neighbors_.resize(offsets[m]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (WedgeId id = 0; id < index.wedges_.size(); ++id) {
    const auto& w = index.wedges_[id];
    index.neighbors_[fill[w.first]++] = {w.second, id};
    index.neighbors_[fill[w.second]++] = {w.first, id};
  }
  for (std::size_t e = 0; e < m; ++e)
    std::sort(index.neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets[e]),
              index.neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets[e + 1]),
              [](const Neighbor& a, const Neighbor& b) { return a.edge < b.edge; });
  return index;
}

WedgeIndex preprocess(const Hypergraph& g) {
  std::vector<WedgeBatch> batches;
  batches.push_back(discover_wedges(g, 0, static_cast<EdgeId>(g.edge_count())));
  return assemble_wedge_index(g, std::move(batches));
}

std::span<const WedgeId> WedgeIndex::incident(EdgeId e, WedgeKind kind,
                                              WedgePosition position) const {
  if (position == WedgePosition::any)
    throw std::invalid_argument("incident() needs a concrete position");
  const int k = static_cast<int>(kind);
  const int p = position == WedgePosition::first ? 0 : 1;
  const auto& offsets = incident_offsets_[k][p];
  if (offsets.empty()) return {};
  return {incident_[k][p].data() + offsets[e], incident_[k][p].data() + offsets[e + 1]};
}

const Hyperwedge* WedgeIndex::find(EdgeId a, EdgeId b) const {
  const auto list = neighbors(a);
  const auto it = std::lower_bound(list.begin(), list.end(), b,
                                   [](const Neighbor& n, EdgeId x) { return n.edge < x; });
  if (it == list.end() || it->edge != b) return nullptr;
  return &wedges_[it->wedge];
}

std::vector<Hyperwedge> wedges_containing(const WedgeIndex& index, EdgeId e,
                                          KindFilter kind,
                                          WedgePosition position) {
  std::vector<WedgeId> ids;
  if (e < index.edge_count()) {
    for (WedgeKind k : {WedgeKind::intersection, WedgeKind::inclusion}) {
      if (kind != KindFilter::any && static_cast<int>(kind) != static_cast<int>(k)) continue;
      for (WedgePosition p : {WedgePosition::first, WedgePosition::second}) {
        if (position != WedgePosition::any && position != p) continue;
        const auto list = index.incident(e, k, p);
        ids.insert(ids.end(), list.begin(), list.end());
      }
    }
  }
  std::sort(ids.begin(), ids.end(), [&](WedgeId a, WedgeId b) {
    return wedge_order_less(index.wedge(a), index.wedge(b));
  });
  std::vector<Hyperwedge> out;
  out.reserve(ids.size());
  for (WedgeId id : ids) out.push_back(index.wedge(id));
  return out;
}

const char* to_string(WedgeKind kind) {
  return kind == WedgeKind::intersection ? "intersection" : "inclusion";
}

void dump_wedges(std::ostream& out, const WedgeIndex& index) {
  for (const auto& w : index.wedges())
    out << w.first << ' ' << w.second << ' ' << to_string(w.kind) << ' '
        << w.common_size << '\n';
}

}  // namespace hypertri
