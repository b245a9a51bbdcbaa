#include "polarnet/synth.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "polarnet/errors.hpp"
#include "polarnet/rng.hpp"

namespace polarnet::synth {

namespace {

using Arc = std::pair<VertexId, VertexId>;

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError(std::string(name) + " must lie in [0, 1]");
}

std::vector<GroupId> block_assignment(std::span<const std::size_t> sizes) {
  std::vector<GroupId> assignment;
  for (GroupId b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == 0) throw ArgumentError("block sizes must be positive");
    assignment.insert(assignment.end(), sizes[b], b);
  }
  return assignment;
}

// Appends arcs for every pair of the block pair (a, b) that succeeds a
// Bernoulli(p) trial, visiting pairs in row-major order with geometric skips.
void sample_block_pair(std::vector<Arc>& arcs, VertexId a_first, std::size_t a_size, VertexId b_first,
                       std::size_t b_size, bool same_block, double p, Rng& rng) {
  if (p <= 0.0) return;
  const std::uint64_t row = same_block ? b_size - 1 : b_size;
  const std::uint64_t total = static_cast<std::uint64_t>(a_size) * row;
  std::uint64_t idx = rng.geometric_skip(p);
  while (idx < total) {
    const auto u = static_cast<VertexId>(idx / row);
    auto v = static_cast<VertexId>(idx % row);
    if (same_block && v >= u) ++v;
    arcs.emplace_back(a_first + u, b_first + v);
    idx += 1 + rng.geometric_skip(p);
  }
}

}  // namespace

LabeledUndirected figure2_instance() {
  LabeledUndirected out;
  for (const char* color : {"black", "red", "blue"}) {
    for (int i = 0; i < 4; ++i) out.labels.intern(std::string(color) + std::to_string(i));
  }
  constexpr VertexId black = 0;
  constexpr VertexId red = 4;
  constexpr VertexId blue = 8;
  std::vector<Arc> edges;
  for (VertexId i = 0; i < 4; ++i) {
    for (VertexId j = i + 1; j < 4; ++j) edges.emplace_back(black + i, black + j);
  }
  for (VertexId base : {red, blue}) {
    for (VertexId i = 0; i < 4; ++i) edges.emplace_back(base + i, base + (i + 1) % 4);
  }
  edges.emplace_back(red + 0, black + 0);
  edges.emplace_back(blue + 0, black + 1);
  edges.emplace_back(red + 1, blue + 1);
  edges.emplace_back(red + 2, blue + 2);
  edges.emplace_back(red + 3, blue + 3);
  out.graph = UndirectedView::from_edges(12, edges);
  const std::size_t sizes[] = {4, 4, 4};
  out.partition = Partition(block_assignment(sizes), {"black", "red", "blue"});
  return out;
}

PlantedGraph planted_partition(std::span<const std::size_t> block_sizes, double p_in, double p_out,
                               std::uint64_t seed) {
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  auto assignment = block_assignment(block_sizes);
  std::vector<VertexId> first(block_sizes.size(), 0);
  for (std::size_t b = 1; b < block_sizes.size(); ++b) first[b] = first[b - 1] + static_cast<VertexId>(block_sizes[b - 1]);

  Rng rng(seed);
  std::vector<Arc> arcs;
  for (std::size_t a = 0; a < block_sizes.size(); ++a) {
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
      sample_block_pair(arcs, first[a], block_sizes[a], first[b], block_sizes[b], a == b, a == b ? p_in : p_out, rng);
    }
  }
  const std::size_t n = assignment.size();
  return {DirectedGraph::from_arcs(n, arcs), Partition(std::move(assignment))};
}

RewireResult configuration_rewire(const UndirectedView& g, std::uint64_t seed, std::size_t swaps) {
  RewireResult result;
  auto edges = g.edge_list();
  const auto key = [](VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  };
  std::unordered_set<std::uint64_t> present;
  present.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) present.insert(key(u, v));

  Rng rng(seed);
  const std::size_t max_attempts = 100 * swaps + 1000;
  while (result.accepted < swaps && edges.size() >= 2 && result.attempted < max_attempts) {
    ++result.attempted;
    const auto i = static_cast<std::size_t>(rng.below(edges.size()));
    const auto j = static_cast<std::size_t>(rng.below(edges.size()));
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, d] = edges[j];
    if (rng.below(2) == 1) std::swap(c, d);
    // a-b, c-d  ->  a-c, b-d
    if (a == c || b == d) continue;
    if (present.count(key(a, c)) || present.count(key(b, d))) continue;
    present.erase(key(a, b));
    present.erase(key(edges[j].first, edges[j].second));
    present.insert(key(a, c));
    present.insert(key(b, d));
    edges[i] = {std::min(a, c), std::max(a, c)};
    edges[j] = {std::min(b, d), std::max(b, d)};
    ++result.accepted;
  }
  result.graph = UndirectedView::from_edges(g.vertex_count(), edges);
  return result;
}

bool is_graphical(std::span<const std::size_t> degrees) {
  std::vector<std::size_t> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::size_t n = d.size();
  const std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
  if (total % 2 != 0) return false;
  if (n > 0 && d.front() >= n) return false;
  std::size_t left = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    left += d[k - 1];
    std::size_t right = k * (k - 1);
    for (std::size_t i = k; i < n; ++i) right += std::min(d[i], k);
    if (left > right) return false;
  }
  return true;
}

UndirectedView realize_degree_sequence(std::span<const std::size_t> degrees) {
  if (!is_graphical(degrees)) throw ArgumentError("degree sequence is not graphical");
  const std::size_t n = degrees.size();
  std::vector<std::size_t> remaining(degrees.begin(), degrees.end());
  std::vector<VertexId> order(n);
  std::vector<Arc> edges;
  for (;;) {
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return remaining[a] > remaining[b]; });
    const VertexId v = order.front();
    const std::size_t need = remaining[v];
    if (need == 0) break;
    remaining[v] = 0;
    for (std::size_t i = 1; i <= need; ++i) {
      const VertexId w = order[i];
      --remaining[w];
      edges.emplace_back(v, w);
    }
  }
  return UndirectedView::from_edges(n, edges);
}

DirectedGraph star(std::size_t n_leaves) {
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i <= n_leaves; ++i) arcs.emplace_back(0, static_cast<VertexId>(i));
  return DirectedGraph::from_arcs(n_leaves + 1, arcs);
}

DirectedGraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) arcs.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  return DirectedGraph::from_arcs(n, arcs);
}

PlantedGraph disjoint_cliques(std::span<const std::size_t> sizes) {
  auto assignment = block_assignment(sizes);
  std::vector<Arc> arcs;
  VertexId first = 0;
  for (std::size_t s : sizes) {
    for (VertexId i = 0; i < s; ++i) {
      for (VertexId j = 0; j < s; ++j) {
        if (i != j) arcs.emplace_back(first + i, first + j);
      }
    }
    first += static_cast<VertexId>(s);
  }
  return {DirectedGraph::from_arcs(assignment.size(), arcs), Partition(std::move(assignment))};
}

DirectedGraph reciprocal_arcs(const UndirectedView& g) {
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.edge_list()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return DirectedGraph::from_arcs(g.vertex_count(), arcs);
}

PlantedGraph reach_asymmetric_instance(const ReachAsymmetricSpec& spec) {
  const std::size_t s = spec.group_size;
  if (s < 2 || spec.closed_hubs > s) throw ArgumentError("reach-asymmetric instance needs group_size >= 2 and hubs <= group_size");
  if (spec.broad_out_degree > 2 * s || spec.broad_in_degree >= s || spec.closed_sparse_out >= s) {
    throw ArgumentError("reach-asymmetric degrees exceed the available targets");
  }
  check_probability(spec.hub_reach, "hub_reach");
  Rng rng(spec.seed);
  std::vector<Arc> arcs;
  // Distinct draws from [lo, lo + width) excluding `skip`.
  const auto sample = [&](VertexId from, VertexId lo, std::size_t width, std::size_t count, VertexId skip) {
    std::unordered_set<VertexId> chosen;
    while (chosen.size() < count) {
      const auto w = static_cast<VertexId>(lo + rng.below(width));
      if (w != skip && chosen.insert(w).second) arcs.emplace_back(from, w);
    }
  };
  const auto broad = VertexId{0};
  const auto closed = static_cast<VertexId>(s);
  for (VertexId v = broad; v < broad + s; ++v) {
    sample(v, static_cast<VertexId>(s), 2 * s, spec.broad_out_degree, kInvalidVertex);
    sample(v, broad, s, spec.broad_in_degree, v);
  }
  for (VertexId v = closed; v < closed + s; ++v) {
    if (v < closed + spec.closed_hubs) {
      for (VertexId w = closed; w < closed + s; ++w) {
        if (w != v && rng.bernoulli(spec.hub_reach)) arcs.emplace_back(v, w);
      }
    } else {
      sample(v, closed, s, spec.closed_sparse_out, v);
    }
  }
  const std::size_t sizes[] = {s, s, s};
  return {DirectedGraph::from_arcs(3 * s, arcs), Partition(block_assignment(sizes), {"broad", "closed", "audience"})};
}

LabelIndex numbered_labels(std::size_t n, const std::string& prefix) {
  LabelIndex labels;
  for (std::size_t i = 0; i < n; ++i) labels.intern(prefix + std::to_string(i));
  return labels;
}

TemporalEdgeSet with_timestamps(const DirectedGraph& g, const LabelIndex& labels, Timestamp origin,
                                Timestamp span_seconds, std::uint64_t seed) {
  if (span_seconds <= 0) throw ArgumentError("timestamp span must be positive");
  if (labels.size() != g.vertex_count()) throw ArgumentError("label index and graph sizes differ");
  Rng rng(seed);
  TemporalEdgeSet edges;
  edges.labels = labels;
  edges.arcs.reserve(g.total_multiplicity());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto out = g.out_neighbors(v);
    const auto mult = g.multiplicities(v);
    for (std::size_t j = 0; j < out.size(); ++j) {
      for (std::uint32_t r = 0; r < mult[j]; ++r) {
        edges.arcs.push_back({v, out[j], origin + static_cast<Timestamp>(rng.below(static_cast<std::uint64_t>(span_seconds)))});
      }
    }
  }
  return edges;
}

DriftingSeries drifting_planted_series(std::span<const std::size_t> block_sizes, double p_in,
                                       std::span<const double> p_out_by_day, std::uint64_t seed, Timestamp origin,
                                       Timestamp day_seconds) {
  DriftingSeries series;
  const std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
  series.edges.labels = numbered_labels(n);
  series.partition = Partition(block_assignment(block_sizes));
  for (std::size_t day = 0; day < p_out_by_day.size(); ++day) {
    const std::uint64_t day_seed = seed * 1000003 + day;
    const auto planted = planted_partition(block_sizes, p_in, p_out_by_day[day], day_seed);
    auto stamped = with_timestamps(planted.graph, series.edges.labels,
                                   origin + static_cast<Timestamp>(day) * day_seconds, day_seconds, day_seed ^ 0x9e3779b97f4a7c15ULL);
    series.edges.arcs.insert(series.edges.arcs.end(), stamped.arcs.begin(), stamped.arcs.end());
  }
  return series;
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "figure2") return Family::figure2;
  if (name == "planted-partition") return Family::planted_partition;
  if (name == "configuration-model") return Family::configuration_model;
  if (name == "star") return Family::star;
  if (name == "directed-cycle") return Family::directed_cycle;
  if (name == "disjoint-cliques") return Family::disjoint_cliques;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::figure2: return "figure2";
    case Family::planted_partition: return "planted-partition";
    case Family::configuration_model: return "configuration-model";
    case Family::star: return "star";
    case Family::directed_cycle: return "directed-cycle";
    case Family::disjoint_cliques: return "disjoint-cliques";
  }
  return "unknown";
}

void validate(const GeneratorSpec& spec) {
  const auto positive_sizes = [&](const char* what) {
    if (spec.sizes.empty()) throw ArgumentError(std::string(what) + " requires at least one size");
    for (auto s : spec.sizes) {
      if (s == 0) throw ArgumentError(std::string(what) + " sizes must be positive");
    }
  };
  switch (spec.family) {
    case Family::figure2:
      break;
    case Family::planted_partition:
      positive_sizes("planted-partition");
      check_probability(spec.p_in, "p_in");
      check_probability(spec.p_out, "p_out");
      break;
    case Family::configuration_model:
      if (spec.degrees.empty()) throw ArgumentError("configuration-model requires a degree sequence");
      if (!is_graphical(spec.degrees)) throw ArgumentError("degree sequence is not graphical");
      break;
    case Family::star:
      if (spec.n < 1) throw ArgumentError("star requires at least one leaf");
      break;
    case Family::directed_cycle:
      if (spec.n < 2) throw ArgumentError("directed-cycle requires at least two vertices");
      break;
    case Family::disjoint_cliques:
      positive_sizes("disjoint-cliques");
      break;
  }
}

SynthOutput generate(const GeneratorSpec& spec) {
  validate(spec);
  SynthOutput out;
  switch (spec.family) {
    case Family::figure2: {
      auto inst = figure2_instance();
      out.labels = std::move(inst.labels);
      out.graph = reciprocal_arcs(inst.graph);
      out.partition = std::move(inst.partition);
      break;
    }
    case Family::planted_partition: {
      auto planted = planted_partition(spec.sizes, spec.p_in, spec.p_out, spec.seed);
      out.labels = numbered_labels(planted.graph.vertex_count());
      out.graph = std::move(planted.graph);
      out.partition = std::move(planted.partition);
      break;
    }
    case Family::configuration_model: {
      const auto base = realize_degree_sequence(spec.degrees);
      auto rewired = configuration_rewire(base, spec.seed, spec.swaps);
      out.labels = numbered_labels(base.vertex_count());
      out.graph = reciprocal_arcs(rewired.graph);
      break;
    }
    case Family::star: {
      out.labels.intern("hub");
      for (std::size_t i = 1; i <= spec.n; ++i) out.labels.intern("leaf" + std::to_string(i));
      out.graph = star(spec.n);
      break;
    }
    case Family::directed_cycle:
      out.labels = numbered_labels(spec.n);
      out.graph = directed_cycle(spec.n);
      break;
    case Family::disjoint_cliques: {
      auto cliques = disjoint_cliques(spec.sizes);
      out.labels = numbered_labels(cliques.graph.vertex_count());
      out.graph = std::move(cliques.graph);
      out.partition = std::move(cliques.partition);
      break;
    }
  }
  return out;
}

}  // namespace polarnet::synth
