#include "hypertri/exact_count.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertri {

Triangle make_triangle(EdgeId a, EdgeId b, EdgeId c, PatternId p) {
  std::array<EdgeId, 3> e{a, b, c};
  std::sort(e.begin(), e.end());
  return {e, p};
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::baseline: return "baseline";
    case Algorithm::ccc: return "ccc";
    case Algorithm::tcc: return "tcc";
    case Algorithm::ttc: return "ttc";
    case Algorithm::ttt: return "ttt";
    case Algorithm::dense_ttt: return "dense_ttt";
    case Algorithm::sparse_ttt: return "sparse_ttt";
    case Algorithm::all_adv: return "all_adv";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::baseline, Algorithm::ccc, Algorithm::tcc, Algorithm::ttc,
                 Algorithm::ttt, Algorithm::dense_ttt, Algorithm::sparse_ttt,
                 Algorithm::all_adv})
    if (to_string(a) == name) return a;
  return std::nullopt;
}

namespace {

std::uint32_t overlap(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::uint32_t n = 0;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      ++n;
      ++x;
      ++y;
    }
  }
  return n;
}

bool overlaps(std::span<const VertexId> a, std::span<const VertexId> b) {
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y)
      ++x;
    else if (*y < *x)
      ++y;
    else
      return true;
  }
  return false;
}

std::uint32_t triple_overlap(std::span<const VertexId> a, std::span<const VertexId> b,
                             std::span<const VertexId> c) {
  std::uint32_t n = 0;
  auto x = a.begin();
  auto y = b.begin();
  auto z = c.begin();
  while (x != a.end() && y != b.end() && z != c.end()) {
    const VertexId hi = std::max({*x, *y, *z});
    if (*x == hi && *y == hi && *z == hi) {
      ++n;
      ++x;
      ++y;
      ++z;
      continue;
    }
    if (*x < hi) ++x;
    if (*y < hi) ++y;
    if (*z < hi) ++z;
  }
  return n;
}

// Wedges joining one hyperedge to its partners, ascending by partner id.
// Up to two segments; `first_is_partner` says which stored slot holds the
// partner in each segment.
class PartnerSeq {
 public:
  PartnerSeq(const WedgeIndex& index, std::span<const WedgeId> lower, bool lower_first,
             std::span<const WedgeId> upper = {}, bool upper_first = false)
      : index_(&index), seg_{lower, upper}, first_{lower_first, upper_first} {}

  bool done() const { return seg_idx_ == 2 || (seg_idx_ == 1 && pos_ >= seg_[1].size()); }
  WedgeId wedge() const { return seg_[seg_idx_][pos_]; }
  EdgeId partner() const {
    const auto& w = index_->wedge(wedge());
    return first_[seg_idx_] ? w.first : w.second;
  }
  void next() {
    ++pos_;
    normalize();
  }
  PartnerSeq& start() {
    normalize();
    return *this;
  }

 private:
  void normalize() {
    while (seg_idx_ < 2 && pos_ >= seg_[seg_idx_].size()) {
      ++seg_idx_;
      pos_ = 0;
    }
  }
  const WedgeIndex* index_;
  std::span<const WedgeId> seg_[2];
  bool first_[2];
  int seg_idx_ = 0;
  std::size_t pos_ = 0;
};

template <typename Fn>
void for_each_common_partner(PartnerSeq x, PartnerSeq y, Fn&& fn) {
  x.start();
  y.start();
  while (!x.done() && !y.done()) {
    const EdgeId px = x.partner();
    const EdgeId py = y.partner();
    if (px < py) {
      x.next();
    } else if (py < px) {
      y.next();
    } else {
      fn(px, x.wedge(), y.wedge());
      x.next();
      y.next();
    }
  }
}

PatternId classify(std::int64_t size_i, std::int64_t size_j, std::int64_t size_k,
                   std::int64_t omega_ij, std::int64_t omega_jk, std::int64_t omega_ik,
                   std::int64_t omega_ijk) {
  return pattern_table().classify(signature_of_triangle(
      size_i, size_j, size_k, omega_ij, omega_jk, omega_ik, omega_ijk));
}

constexpr auto kT = WedgeKind::intersection;
constexpr auto kC = WedgeKind::inclusion;
constexpr auto kFirst = WedgePosition::first;
constexpr auto kSecond = WedgePosition::second;

}  // namespace

void count_ttt_at(const WedgeIndex& index, WedgeId anchor, TttFilter filter,
                  TriangleCollector& out) {
  const auto& w = index.wedge(anchor);
  const EdgeId i = w.first;
  const EdgeId j = w.second;
  const auto omega_ij_set = index.common(w);

  // Companions (i, k) later in wedge order share the first slot with the anchor.
  const auto from_i = index.incident(i, kT, kFirst);
  const auto later = from_i.subspan(static_cast<std::size_t>(
      std::upper_bound(from_i.begin(), from_i.end(), anchor) - from_i.begin()));

  for_each_common_partner(
      PartnerSeq(index, later, false), PartnerSeq(index, index.incident(j, kT, kFirst), false),
      [&](EdgeId k, WedgeId w_ik, WedgeId w_jk) {
        const auto omega_ik_set = index.common(w_ik);
        std::uint32_t g = 0;
        if (filter == TttFilter::sparse) {
          if (overlaps(omega_ij_set, omega_ik_set)) return;
        } else {
          g = overlap(omega_ij_set, omega_ik_set);
          if (filter == TttFilter::dense && g == 0) return;
        }
        out.emit(i, j, k,
                 classify(index.edge_size(i), index.edge_size(j), index.edge_size(k),
                          w.common_size, index.wedge(w_jk).common_size,
                          omega_ik_set.size(), g));
      });
}

void count_ccc_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out) {
  const auto& w = index.wedge(anchor);
  // e_first ⊃ e_second ⊃ e_k for every inclusion wedge stored under e_second.
  for (WedgeId id : index.incident(w.second, kC, kFirst))
    out.emit(w.first, w.second, index.wedge(id).second, PatternId(1));
}

void count_tcc_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out) {
  const auto& w = index.wedge(anchor);
  const EdgeId i = w.first;
  const EdgeId j = w.second;
  const std::int64_t omega_ij = w.common_size;

  // e_k contained in both.
  for_each_common_partner(
      PartnerSeq(index, index.incident(i, kC, kFirst), false),
      PartnerSeq(index, index.incident(j, kC, kFirst), false),
      [&](EdgeId k, WedgeId, WedgeId) {
        out.emit(i, j, k, PatternId(omega_ij > index.edge_size(k) ? 3 : 2));
      });
  // e_k containing both.
  for_each_common_partner(
      PartnerSeq(index, index.incident(i, kC, kSecond), true),
      PartnerSeq(index, index.incident(j, kC, kSecond), true),
      [&](EdgeId k, WedgeId w_ki, WedgeId w_kj) {
        const std::int64_t omega_ki = index.wedge(w_ki).common_size;
        const std::int64_t omega_kj = index.wedge(w_kj).common_size;
        out.emit(i, j, k,
                 PatternId(omega_ki + omega_kj - omega_ij == index.edge_size(k) ? 4 : 5));
      });
}

void count_ttc_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out) {
  const auto& w = index.wedge(anchor);
  const EdgeId i = w.first;   // container
  const EdgeId j = w.second;  // contained
  const std::int64_t omega_ij = w.common_size;

  // Intersection partners sit in either stored slot.
  for_each_common_partner(
      PartnerSeq(index, index.incident(i, kT, kSecond), true, index.incident(i, kT, kFirst), false),
      PartnerSeq(index, index.incident(j, kT, kSecond), true, index.incident(j, kT, kFirst), false),
      [&](EdgeId k, WedgeId w_ik, WedgeId w_jk) {
        const std::int64_t omega_ik = index.wedge(w_ik).common_size;
        const std::int64_t omega_jk = index.wedge(w_jk).common_size;
        int p = 8;
        if (omega_ik == omega_jk)
          p = 6;
        else if (omega_ij + omega_ik - omega_jk == index.edge_size(i))
          p = 7;
        out.emit(i, j, k, PatternId(p));
      });
}

void count_min_order_at(const WedgeIndex& index, WedgeId anchor, TriangleCollector& out) {
  const auto& w = index.wedge(anchor);
  const EdgeId x = w.first;
  const EdgeId y = w.second;
  const auto nx = index.neighbors(x);
  const auto ny = index.neighbors(y);
  auto a = nx.begin();
  auto b = ny.begin();
  while (a != nx.end() && b != ny.end()) {
    if (a->edge < b->edge) {
      ++a;
      continue;
    }
    if (b->edge < a->edge) {
      ++b;
      continue;
    }
    const EdgeId k = a->edge;
    const auto& w_xk = index.wedge(a->wedge);
    const auto& w_yk = index.wedge(b->wedge);
    ++a;
    ++b;
    if (!wedge_order_less(w, w_xk) || !wedge_order_less(w, w_yk)) continue;
    const auto g = overlap(index.common(w), index.common(w_xk));
    out.emit(x, y, k,
             classify(index.edge_size(x), index.edge_size(y), index.edge_size(k),
                      w.common_size, w_yk.common_size, w_xk.common_size, g));
  }
}

namespace {

void baseline_at(const Hypergraph& g, const WedgeIndex& index, EdgeId i,
                 TriangleCollector& out) {
  const auto nb = index.neighbors(i);
  auto it = std::upper_bound(nb.begin(), nb.end(), i,
                             [](EdgeId v, const Neighbor& n) { return v < n.edge; });
  for (auto a = it; a != nb.end(); ++a) {
    for (auto b = a + 1; b != nb.end(); ++b) {
      const Hyperwedge* w_jk = index.find(a->edge, b->edge);
      if (w_jk == nullptr) continue;
      const auto g3 = triple_overlap(g.edge(i), g.edge(a->edge), g.edge(b->edge));
      out.emit(i, a->edge, b->edge,
               classify(g.edge_size(i), g.edge_size(a->edge), g.edge_size(b->edge),
                        index.wedge(a->wedge).common_size, w_jk->common_size,
                        index.wedge(b->wedge).common_size, g3));
    }
  }
}

// Intersection wedges [begin, end) with common-set skipping: a later wedge
// (i, k) whose common set equals that of the current wedge joins the
// accumulated set and is not scanned again. Skipping stays inside the range.
void dense_ttt_range(const WedgeIndex& index, const TauLists& tau, WedgeId begin,
                     WedgeId end, TriangleCollector& out) {
  struct Cursor {
    std::span<const WedgeId> list;
    std::size_t pos;
  };
  std::vector<char> visited(end - begin, 0);
  std::vector<Cursor> cursors;
  std::vector<WedgeId> phi;

  for (WedgeId anchor = begin; anchor < end; ++anchor) {
    if (visited[anchor - begin]) continue;
    const auto& w = index.wedge(anchor);
    const EdgeId i = w.first;
    const auto omega = index.common(w);

    cursors.clear();
    for (VertexId v : omega) {
      const auto list = tau[v];
      const auto pos = static_cast<std::size_t>(
          std::upper_bound(list.begin(), list.end(), anchor) - list.begin());
      cursors.push_back({list, pos});
    }
    auto live = [&](const Cursor& c) {
      return c.pos < c.list.size() && index.wedge(c.list[c.pos]).first == i;
    };

    phi.assign(1, anchor);
    for (;;) {
      WedgeId w1 = 0;
      std::uint32_t hits = 0;
      for (const auto& c : cursors) {
        if (!live(c)) continue;
        const WedgeId id = c.list[c.pos];
        if (hits == 0 || id < w1) {
          w1 = id;
          hits = 1;
        } else if (id == w1) {
          ++hits;
        }
      }
      if (hits == 0) break;
      for (auto& c : cursors)
        if (live(c) && c.list[c.pos] == w1) ++c.pos;

      const auto& partner = index.wedge(w1);
      const EdgeId k = partner.second;
      for (WedgeId w2 : phi) {
        const auto& mid = index.wedge(w2);
        const EdgeId j = mid.second;
        const Hyperwedge* w_jk = index.find(j, k);
        if (w_jk == nullptr || w_jk->kind != WedgeKind::intersection) continue;
        const auto g = overlap(index.common(mid), index.common(partner));
        out.emit(i, j, k,
                 classify(index.edge_size(i), index.edge_size(j), index.edge_size(k),
                          mid.common_size, w_jk->common_size, partner.common_size, g));
      }
      if (hits == w.common_size && partner.common_size == w.common_size && w1 < end) {
        phi.push_back(w1);
        visited[w1 - begin] = 1;
      }
    }
  }
}

}  // namespace

TauLists::TauLists(const WedgeIndex& index) {
  const std::size_t n = index.vertex_count();
  offsets_.assign(n + 1, 0);
  const auto inter = index.intersection_wedges();
  for (const auto& w : inter)
    for (VertexId v : index.common(w)) ++offsets_[v + 1];
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  ids_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (WedgeId id = 0; id < inter.size(); ++id)
    for (VertexId v : index.common(id)) ids_[fill[v]++] = id;
}

std::size_t anchor_count(Algorithm algo, const CountContext& ctx) {
  const auto& index = *ctx.index;
  switch (algo) {
    case Algorithm::baseline: return index.edge_count();
    case Algorithm::ccc:
    case Algorithm::ttc: return index.inclusion_count();
    case Algorithm::tcc:
    case Algorithm::ttt:
    case Algorithm::dense_ttt:
    case Algorithm::sparse_ttt: return index.intersection_count();
    case Algorithm::all_adv: return index.size();
  }
  return 0;
}

void count_range(Algorithm algo, const CountContext& ctx, std::size_t begin,
                 std::size_t end, TriangleCollector& out) {
  const auto& index = *ctx.index;
  const WedgeId incl = index.inclusion_begin();
  switch (algo) {
    case Algorithm::baseline:
      if (ctx.graph == nullptr) throw std::invalid_argument("baseline needs the hypergraph");
      for (std::size_t e = begin; e < end; ++e)
        baseline_at(*ctx.graph, index, static_cast<EdgeId>(e), out);
      break;
    case Algorithm::ccc:
      for (std::size_t p = begin; p < end; ++p)
        count_ccc_at(index, static_cast<WedgeId>(incl + p), out);
      break;
    case Algorithm::ttc:
      for (std::size_t p = begin; p < end; ++p)
        count_ttc_at(index, static_cast<WedgeId>(incl + p), out);
      break;
    case Algorithm::tcc:
      for (std::size_t p = begin; p < end; ++p)
        count_tcc_at(index, static_cast<WedgeId>(p), out);
      break;
    case Algorithm::ttt:
      for (std::size_t p = begin; p < end; ++p)
        count_ttt_at(index, static_cast<WedgeId>(p), TttFilter::all, out);
      break;
    case Algorithm::sparse_ttt:
      for (std::size_t p = begin; p < end; ++p)
        count_ttt_at(index, static_cast<WedgeId>(p), TttFilter::sparse, out);
      break;
    case Algorithm::dense_ttt:
      if (ctx.tau == nullptr) throw std::invalid_argument("dense_ttt needs tau lists");
      dense_ttt_range(index, *ctx.tau, static_cast<WedgeId>(begin),
                      static_cast<WedgeId>(end), out);
      break;
    case Algorithm::all_adv:
      for (std::size_t p = begin; p < end; ++p) {
        const auto id = static_cast<WedgeId>(p);
        if (id < incl) {
          count_ttt_at(index, id, TttFilter::all, out);
          count_tcc_at(index, id, out);
        } else {
          count_ccc_at(index, id, out);
          count_ttc_at(index, id, out);
        }
      }
      break;
  }
}

namespace {

PatternCounts run_sequential(Algorithm algo, const WedgeIndex& index,
                             const Hypergraph* g, const TriangleSink& sink) {
  std::optional<TauLists> tau;
  if (algo == Algorithm::dense_ttt) tau.emplace(index);
  const CountContext ctx{&index, g, tau ? &*tau : nullptr};
  TriangleCollector out(&sink);
  count_range(algo, ctx, 0, anchor_count(algo, ctx), out);
  return out.counts();
}

}  // namespace

PatternCounts count_baseline(const Hypergraph& g, const WedgeIndex& index,
                             const TriangleSink& sink) {
  return run_sequential(Algorithm::baseline, index, &g, sink);
}
PatternCounts count_ccc(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::ccc, index, nullptr, sink);
}
PatternCounts count_tcc(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::tcc, index, nullptr, sink);
}
PatternCounts count_ttc(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::ttc, index, nullptr, sink);
}
PatternCounts count_ttt(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::ttt, index, nullptr, sink);
}
PatternCounts count_dense_ttt(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::dense_ttt, index, nullptr, sink);
}
PatternCounts count_sparse_ttt(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::sparse_ttt, index, nullptr, sink);
}
PatternCounts count_all_adv(const WedgeIndex& index, const TriangleSink& sink) {
  return run_sequential(Algorithm::all_adv, index, nullptr, sink);
}

std::uint64_t neighbor_pair_sum(const WedgeIndex& index) {
  std::uint64_t sum = 0;
  for (EdgeId e = 0; e < index.edge_count(); ++e) {
    const std::uint64_t d = index.neighbors(e).size();
    sum += d * (d - (d > 0 ? 1 : 0)) / 2;
  }
  return sum;
}

std::uint64_t count_open_triangles(const WedgeIndex& index, const PatternCounts& closed) {
  const std::uint64_t pairs = neighbor_pair_sum(index);
  const std::uint64_t closed3 = 3 * closed.total();
  if (closed3 > pairs)
    throw std::invalid_argument("closed counts do not belong to this wedge index");
  return pairs - closed3;
}

std::uint64_t count_open_triangles(const WedgeIndex& index) {
  return count_open_triangles(index, count_all_adv(index));
}

}  // namespace hypertri
