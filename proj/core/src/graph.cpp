#include "polarnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polarnet/errors.hpp"

namespace polarnet {

namespace {

void check_id(VertexId v, std::size_t n) {
  if (v >= n) throw ArgumentError("vertex id " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
}

}  // namespace

DirectedGraph DirectedGraph::from_arcs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> arcs) {
  std::vector<std::size_t> raw_offsets(n + 1, 0);
  for (const auto& [s, t] : arcs) {
    check_id(s, n);
    check_id(t, n);
    if (s != t) ++raw_offsets[s + 1];
  }
  std::partial_sum(raw_offsets.begin(), raw_offsets.end(), raw_offsets.begin());
  std::vector<VertexId> raw(raw_offsets.back());
  {
    std::vector<std::size_t> cursor(raw_offsets.begin(), raw_offsets.end() - 1);
    for (const auto& [s, t] : arcs) {
      if (s != t) raw[cursor[s]++] = t;
    }
  }

  DirectedGraph g;
  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(raw.size());
  g.multiplicity_.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(raw_offsets[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(raw_offsets[v + 1]);
    std::sort(first, last);
    for (auto it = first; it != last;) {
      auto run_end = std::find_if(it, last, [x = *it](VertexId y) { return y != x; });
      g.targets_.push_back(*it);
      g.multiplicity_.push_back(static_cast<std::uint32_t>(run_end - it));
      it = run_end;
    }
    g.offsets_[v + 1] = g.targets_.size();
  }
  return g;
}

bool DirectedGraph::has_arc(VertexId source, VertexId target) const {
  const auto out = out_neighbors(source);
  return std::binary_search(out.begin(), out.end(), target);
}

std::uint32_t DirectedGraph::multiplicity(VertexId source, VertexId target) const {
  const auto out = out_neighbors(source);
  const auto it = std::lower_bound(out.begin(), out.end(), target);
  if (it == out.end() || *it != target) return 0;
  return multiplicities(source)[static_cast<std::size_t>(it - out.begin())];
}

std::uint64_t DirectedGraph::total_multiplicity() const noexcept {
  return std::accumulate(multiplicity_.begin(), multiplicity_.end(), std::uint64_t{0});
}

std::vector<std::pair<VertexId, VertexId>> DirectedGraph::arc_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arc_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (VertexId w : out_neighbors(v)) out.emplace_back(v, w);
  }
  return out;
}

UndirectedView UndirectedView::from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::size_t> raw_offsets(n + 1, 0);
  for (const auto& [u, v] : edges) {
    check_id(u, n);
    check_id(v, n);
    if (u == v) continue;
    ++raw_offsets[u + 1];
    ++raw_offsets[v + 1];
  }
  std::partial_sum(raw_offsets.begin(), raw_offsets.end(), raw_offsets.begin());
  std::vector<VertexId> raw(raw_offsets.back());
  {
    std::vector<std::size_t> cursor(raw_offsets.begin(), raw_offsets.end() - 1);
    for (const auto& [u, v] : edges) {
      if (u == v) continue;
      raw[cursor[u]++] = v;
      raw[cursor[v]++] = u;
    }
  }

  UndirectedView g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(raw_offsets[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(raw_offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    g.offsets_[v + 1] = g.adjacency_.size();
  }
  return g;
}

bool UndirectedView::has_edge(VertexId u, VertexId v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> UndirectedView::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DirectedGraph build_directed_graph(std::size_t n, std::span<const TemporalArc> arcs) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(arcs.size());
  for (const auto& arc : arcs) pairs.emplace_back(arc.source, arc.target);
  return DirectedGraph::from_arcs(n, pairs);
}

DirectedGraph build_directed_graph(const TemporalEdgeSet& edges, const std::optional<TimeWindow>& window) {
  if (!window) return build_directed_graph(edges.vertex_count(), edges.arcs);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& arc : edges.arcs) {
    if (window->contains(arc.timestamp)) pairs.emplace_back(arc.source, arc.target);
  }
  return DirectedGraph::from_arcs(edges.vertex_count(), pairs);
}

UndirectedView underlying_undirected(const DirectedGraph& g) {
  return UndirectedView::from_edges(g.vertex_count(), g.arc_list());
}

std::optional<VertexId> InducedSubgraph::to_local(VertexId parent) const {
  const auto it = std::lower_bound(to_parent.begin(), to_parent.end(), parent);
  if (it == to_parent.end() || *it != parent) return std::nullopt;
  return static_cast<VertexId>(it - to_parent.begin());
}

InducedSubgraph induced_subgraph(const DirectedGraph& g, std::span<const VertexId> vertices) {
  const std::size_t n = g.vertex_count();
  InducedSubgraph result;
  result.to_parent.assign(vertices.begin(), vertices.end());
  for (VertexId v : result.to_parent) check_id(v, n);
  std::sort(result.to_parent.begin(), result.to_parent.end());
  result.to_parent.erase(std::unique(result.to_parent.begin(), result.to_parent.end()), result.to_parent.end());

  std::vector<VertexId> local(n, kInvalidVertex);
  for (std::size_t i = 0; i < result.to_parent.size(); ++i) local[result.to_parent[i]] = static_cast<VertexId>(i);

  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId v : result.to_parent) {
    const auto out = g.out_neighbors(v);
    const auto mult = g.multiplicities(v);
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (local[out[j]] == kInvalidVertex) continue;
      for (std::uint32_t r = 0; r < mult[j]; ++r) arcs.emplace_back(local[v], local[out[j]]);
    }
  }
  result.graph = DirectedGraph::from_arcs(result.to_parent.size(), arcs);
  return result;
}

}  // namespace polarnet
