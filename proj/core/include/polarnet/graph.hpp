#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polarnet/temporal.hpp"
#include "polarnet/types.hpp"
#include "polarnet/windows.hpp"

namespace polarnet {

/// Simple directed graph in CSR form. Out-neighbor lists are sorted and free
/// of duplicates and self-loops. Immutable once built.
class DirectedGraph {
 public:
  DirectedGraph() : offsets_(1, 0) {}

  /// Builds from raw (source, target) pairs. Self-loops are discarded and
  /// repeated pairs collapse into one arc whose multiplicity counts them.
  static DirectedGraph from_arcs(std::size_t n, std::span<const std::pair<VertexId, VertexId>> arcs);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return targets_.size(); }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const std::uint32_t> multiplicities(VertexId v) const {
    return {multiplicity_.data() + offsets_[v], multiplicity_.data() + offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_arc(VertexId source, VertexId target) const;
  /// Number of interactions collapsed into source->target, or 0.
  std::uint32_t multiplicity(VertexId source, VertexId target) const;
  std::uint64_t total_multiplicity() const noexcept;

  /// All arcs in (source, target) lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> arc_list() const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<std::uint32_t> multiplicity_;
};

/// Simple undirected graph with sorted, symmetric adjacency.
class UndirectedView {
 public:
  UndirectedView() : offsets_(1, 0) {}

  /// Builds from unordered pairs; self-loops dropped, duplicates collapsed.
  static UndirectedView from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  bool has_edge(VertexId u, VertexId v) const;

  /// Each edge once as (min, max), lexicographically ordered.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  friend bool operator==(const UndirectedView&, const UndirectedView&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
};

/// Graph over the full vertex universe of `edges`, restricted to arcs whose
/// timestamp lies in `window` when one is given.
DirectedGraph build_directed_graph(const TemporalEdgeSet& edges, const std::optional<TimeWindow>& window = std::nullopt);

/// Same as above over an arbitrary arc range; every id must be < n.
DirectedGraph build_directed_graph(std::size_t n, std::span<const TemporalArc> arcs);

/// One undirected edge per unordered pair joined by at least one arc.
UndirectedView underlying_undirected(const DirectedGraph& g);

struct InducedSubgraph {
  DirectedGraph graph;
  /// local id -> id in the parent graph, ascending.
  std::vector<VertexId> to_parent;

  std::optional<VertexId> to_local(VertexId parent) const;
};

/// Keeps arcs with both endpoints in `vertices` and re-indexes densely in
/// ascending parent order. Throws ArgumentError on an out-of-range id.
InducedSubgraph induced_subgraph(const DirectedGraph& g, std::span<const VertexId> vertices);

}  // namespace polarnet
