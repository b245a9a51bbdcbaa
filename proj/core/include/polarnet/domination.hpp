#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarnet/graph.hpp"
#include "polarnet/partition.hpp"

namespace polarnet {

/// Greedy Partial Directed Dominating Set outcome.
struct DominationResult {
  /// Picked vertices in pick order.
  std::vector<VertexId> selected;
  /// covered_after_step[k] = targets covered by the first k+1 picks.
  std::vector<std::size_t> covered_after_step;
  double rho = 1.0;
  std::size_t target = 0;
  std::size_t n_target = 0;
  std::string candidates;

  std::size_t covered() const noexcept { return covered_after_step.empty() ? 0 : covered_after_step.back(); }
  double covered_fraction() const noexcept;
};

struct DominationOptions {
  /// Recompute every span from scratch after each pick and compare with the
  /// incremental bookkeeping; throws std::logic_error on mismatch.
  bool verify_spans = false;
};

/// ceil(rho * n), tolerant of rounding noise in rho * n.
std::size_t coverage_target(double rho, std::size_t n);

/// H(x) = 1 + 1/2 + ... + 1/x.
double harmonic_number(std::size_t x);

/// Vertices with at least one out-arc.
std::vector<VertexId> spreaders(const DirectedGraph& g);

/// Greedy partial covering by closed out-neighborhoods. Candidates default
/// to spreaders(g), targets to every vertex; target = coverage_target(rho,
/// |targets|). Ties on span size go to the lowest vertex id.
/// Throws ArgumentError unless 0 < rho <= 1 and InfeasibleError when the
/// candidates cannot cover the target.
DominationResult greedy_pdds(const DirectedGraph& g, double rho,
                             std::optional<std::span<const VertexId>> candidates = std::nullopt,
                             std::optional<std::span<const VertexId>> cover_targets = std::nullopt,
                             const DominationOptions& options = {});

/// Exact minimum solution size by subset enumeration; nullopt when no
/// subset reaches the target. Refuses more than kBruteForceCandidateLimit
/// candidates with ArgumentError.
inline constexpr std::size_t kBruteForceCandidateLimit = 25;
std::optional<std::size_t> brute_force_pdds(const DirectedGraph& g, double rho,
                                            std::span<const VertexId> candidates,
                                            std::optional<std::span<const VertexId>> cover_targets = std::nullopt);

struct CurvePoint {
  std::size_t spreaders;
  double fraction;
};

/// Coverage fraction after each greedy pick, up to `max_spreaders` picks or
/// until no candidate adds coverage. The pick order matches greedy_pdds.
std::vector<CurvePoint> coverage_curve(const DirectedGraph& g, std::span<const VertexId> candidates,
                                       std::span<const VertexId> cover_targets, std::size_t max_spreaders);

/// Greedy covering of group `group` inside its induced subgraph, using the
/// group's members that are spreaders in g. Ids in the result are global.
DominationResult in_group_domination(const DirectedGraph& g, const Partition& p, GroupId group, double rho,
                                     const DominationOptions& options = {});

/// Greedy covering of all of g using only the group's spreaders.
DominationResult network_domination_by_group(const DirectedGraph& g, const Partition& p, GroupId group,
                                             double rho, const DominationOptions& options = {});

/// Candidate and target sets used by the two group modes, exposed so curves
/// can be drawn for the same instances.
struct GroupInstance {
  /// Present in in-group mode; the greedy then runs on subgraph->graph.
  std::optional<InducedSubgraph> subgraph;
  /// Ids local to the graph the greedy runs on.
  std::vector<VertexId> candidates;
  std::vector<VertexId> targets;

  const DirectedGraph& graph(const DirectedGraph& parent) const {
    return subgraph ? subgraph->graph : parent;
  }
  VertexId to_global(VertexId local) const { return subgraph ? subgraph->to_parent[local] : local; }
};

GroupInstance in_group_instance(const DirectedGraph& g, const Partition& p, GroupId group);
GroupInstance network_by_group_instance(const DirectedGraph& g, const Partition& p, GroupId group);

}  // namespace polarnet
