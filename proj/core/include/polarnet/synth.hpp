#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarnet/graph.hpp"
#include "polarnet/partition.hpp"
#include "polarnet/temporal.hpp"

namespace polarnet::synth {

struct LabeledUndirected {
  LabelIndex labels;
  UndirectedView graph;
  Partition partition;
};

struct PlantedGraph {
  DirectedGraph graph;
  Partition partition;
};

/// Twelve vertices in three groups of four: a black 4-clique and red and
/// blue 4-cycles, joined by one red-black, one blue-black and three
/// red-blue edges (m = 19). Groups 0, 1, 2 are labeled black, red, blue.
LabeledUndirected figure2_instance();

/// Every ordered pair (u, v), u != v, gets an arc with probability p_in
/// inside a block and p_out across blocks. Blocks occupy consecutive ids.
PlantedGraph planted_partition(std::span<const std::size_t> block_sizes, double p_in, double p_out,
                               std::uint64_t seed);

struct RewireResult {
  UndirectedView graph;
  std::size_t accepted = 0;
  std::size_t attempted = 0;
};

/// Performs `swaps` accepted double-edge swaps, rejecting any swap that
/// would create a self-loop or a repeated edge. Gives up after
/// 100 * swaps + 1000 attempts (graphs such as cliques admit no swap).
RewireResult configuration_rewire(const UndirectedView& g, std::uint64_t seed, std::size_t swaps);

/// Erdős–Gallai test.
bool is_graphical(std::span<const std::size_t> degrees);

/// Simple graph realizing `degrees` (Havel–Hakimi). Throws ArgumentError
/// if the sequence is not graphical.
UndirectedView realize_degree_sequence(std::span<const std::size_t> degrees);

/// Hub 0 with arcs to leaves 1..n_leaves.
DirectedGraph star(std::size_t n_leaves);

/// Arcs i -> i+1 mod n.
DirectedGraph directed_cycle(std::size_t n);

/// Complete digraphs on consecutive id blocks, each block one group.
PlantedGraph disjoint_cliques(std::span<const std::size_t> sizes);

/// Each undirected edge as two opposite arcs.
DirectedGraph reciprocal_arcs(const UndirectedView& g);

/// Three groups of `group_size` vertices for contrasting in-group and
/// network-wide domination:
///  - group 0 ("broad"): every vertex sends arcs to `broad_out_degree`
///    random vertices outside the group and `broad_in_degree` inside it;
///  - group 1 ("closed"): `closed_hubs` hubs, each reaching every other
///    group member with probability `hub_reach`, no arcs leaving the group;
///  - group 2 ("audience"): no out-arcs.
struct ReachAsymmetricSpec {
  std::size_t group_size = 200;
  std::size_t broad_out_degree = 40;
  std::size_t broad_in_degree = 2;
  std::size_t closed_hubs = 4;
  double hub_reach = 0.4;
  std::size_t closed_sparse_out = 1;
  std::uint64_t seed = 1;
};
PlantedGraph reach_asymmetric_instance(const ReachAsymmetricSpec& spec);

/// "<prefix><id>" labels for ids 0..n-1.
LabelIndex numbered_labels(std::size_t n, const std::string& prefix = "v");

/// Assigns every arc of `g` an independent uniform timestamp in
/// [origin, origin + span_seconds).
TemporalEdgeSet with_timestamps(const DirectedGraph& g, const LabelIndex& labels, Timestamp origin,
                                Timestamp span_seconds, std::uint64_t seed);

/// One planted-partition day per entry of `p_out_by_day`, day t occupying
/// [origin + t * day_seconds, origin + (t + 1) * day_seconds).
struct DriftingSeries {
  TemporalEdgeSet edges;
  Partition partition;
};
DriftingSeries drifting_planted_series(std::span<const std::size_t> block_sizes, double p_in,
                                       std::span<const double> p_out_by_day, std::uint64_t seed,
                                       Timestamp origin = 0, Timestamp day_seconds = 86400);

enum class Family { figure2, planted_partition, configuration_model, star, directed_cycle, disjoint_cliques };

std::optional<Family> parse_family(const std::string& name);
std::string family_name(Family family);

struct GeneratorSpec {
  Family family = Family::figure2;
  /// Block sizes (planted-partition) or clique sizes (disjoint-cliques).
  std::vector<std::size_t> sizes;
  double p_in = 0.0;
  double p_out = 0.0;
  std::vector<std::size_t> degrees;
  /// Leaf count (star) or cycle length (directed-cycle).
  std::size_t n = 0;
  /// Accepted swaps applied after realizing the degree sequence.
  std::size_t swaps = 0;
  std::uint64_t seed = 0;
};

/// Throws ArgumentError when the parameters violate the family's contract.
void validate(const GeneratorSpec& spec);

struct SynthOutput {
  LabelIndex labels;
  /// Undirected families are stored as reciprocal arc pairs.
  DirectedGraph graph;
  std::optional<Partition> partition;
};

SynthOutput generate(const GeneratorSpec& spec);

}  // namespace polarnet::synth
