#include "polarnet/community.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "polarnet/errors.hpp"
#include "polarnet/rng.hpp"

namespace polarnet {

namespace {

// Weighted graph of super-vertices. Each undirected link appears in both
// endpoint rows; `internal` holds the weight of edges collapsed inside a
// super-vertex, counted once.
struct LevelGraph {
  std::vector<std::size_t> offsets;
  std::vector<VertexId> neighbors;
  std::vector<double> weights;
  std::vector<double> internal;
  std::vector<double> volume;

  std::size_t size() const { return volume.size(); }
};

LevelGraph level_from(const UndirectedView& g) {
  const std::size_t n = g.vertex_count();
  LevelGraph level;
  level.offsets.assign(n + 1, 0);
  level.internal.assign(n, 0.0);
  level.volume.assign(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    const auto adj = g.neighbors(v);
    level.neighbors.insert(level.neighbors.end(), adj.begin(), adj.end());
    level.offsets[v + 1] = level.neighbors.size();
    level.volume[v] = static_cast<double>(adj.size());
  }
  level.weights.assign(level.neighbors.size(), 1.0);
  return level;
}

double level_modularity(const LevelGraph& level, std::span<const VertexId> community, std::size_t k,
                        double edges, double resolution) {
  std::vector<double> in(k, 0.0);
  std::vector<double> tot(k, 0.0);
  for (VertexId v = 0; v < level.size(); ++v) {
    const VertexId c = community[v];
    in[c] += level.internal[v];
    tot[c] += level.volume[v];
    for (std::size_t e = level.offsets[v]; e < level.offsets[v + 1]; ++e) {
      if (community[level.neighbors[e]] == c) in[c] += level.weights[e] / 2.0;
    }
  }
  double q = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    const double share = tot[c] / (2.0 * edges);
    q += in[c] / edges - resolution * share * share;
  }
  return q;
}

// Local moving phase; returns whether any vertex changed community.
// `community` starts as the identity and ends with arbitrary ids < size().
bool move_vertices(const LevelGraph& level, std::vector<VertexId>& community, double edges,
                   const DetectionOptions& options, Rng& rng) {
  const std::size_t n = level.size();
  std::vector<double> tot(level.volume);
  std::vector<double> link(n, 0.0);
  std::vector<VertexId> touched;
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  const double two_m = 2.0 * edges;
  bool any_move = false;

  for (;;) {
    rng.shuffle(std::span<VertexId>(order));
    double improvement = 0.0;
    for (VertexId v : order) {
      const VertexId home = community[v];
      const double vol = level.volume[v];
      for (std::size_t e = level.offsets[v]; e < level.offsets[v + 1]; ++e) {
        const VertexId c = community[level.neighbors[e]];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += level.weights[e];
      }
      tot[home] -= vol;
      // Gains are scaled by m relative to the vertex standing alone.
      const auto gain = [&](VertexId c) { return link[c] - options.resolution * tot[c] * vol / two_m; };
      const double stay = gain(home);
      VertexId best = home;
      double best_gain = stay;
      bool have_other = false;
      double other_gain = 0.0;
      VertexId other = home;
      for (VertexId c : touched) {
        if (c == home) continue;
        const double g = gain(c);
        if (!have_other || g > other_gain || (g == other_gain && c < other)) {
          have_other = true;
          other_gain = g;
          other = c;
        }
      }
      if (have_other && other_gain > stay) {
        best = other;
        best_gain = other_gain;
      }
      tot[best] += vol;
      if (best != home) {
        community[v] = best;
        improvement += (best_gain - stay) / edges;
        any_move = true;
      }
      for (VertexId c : touched) link[c] = 0.0;
      touched.clear();
    }
    if (improvement < options.min_improvement) break;
  }
  return any_move;
}

// Renumbers `community` densely in order of first appearance.
std::size_t compact(std::vector<VertexId>& community) {
  std::vector<VertexId> remap(community.size(), kInvalidVertex);
  VertexId next = 0;
  for (auto& c : community) {
    if (remap[c] == kInvalidVertex) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

LevelGraph aggregate(const LevelGraph& level, std::span<const VertexId> community, std::size_t k) {
  LevelGraph next;
  next.internal.assign(k, 0.0);
  next.volume.assign(k, 0.0);
  std::vector<std::tuple<VertexId, VertexId, double>> links;
  links.reserve(level.neighbors.size());
  for (VertexId v = 0; v < level.size(); ++v) {
    const VertexId c = community[v];
    next.internal[c] += level.internal[v];
    next.volume[c] += level.volume[v];
    for (std::size_t e = level.offsets[v]; e < level.offsets[v + 1]; ++e) {
      const VertexId d = community[level.neighbors[e]];
      if (d == c) {
        next.internal[c] += level.weights[e] / 2.0;
      } else {
        links.emplace_back(c, d, level.weights[e]);
      }
    }
  }
  std::sort(links.begin(), links.end());
  next.offsets.assign(k + 1, 0);
  for (std::size_t i = 0; i < links.size();) {
    const auto [c, d, w0] = links[i];
    double w = 0.0;
    for (; i < links.size() && std::get<0>(links[i]) == c && std::get<1>(links[i]) == d; ++i) w += std::get<2>(links[i]);
    next.neighbors.push_back(d);
    next.weights.push_back(w);
    ++next.offsets[c + 1];
  }
  std::partial_sum(next.offsets.begin(), next.offsets.end(), next.offsets.begin());
  return next;
}

}  // namespace

DetectionResult detect_communities_traced(const UndirectedView& g, const DetectionOptions& options) {
  if (!(options.resolution > 0.0)) throw ArgumentError("resolution must be positive");
  if (!(options.min_improvement > 0.0)) throw ArgumentError("min_improvement must be positive");
  if (g.edge_count() == 0) throw ArgumentError("community detection needs a graph with at least one edge");

  const double edges = static_cast<double>(g.edge_count());
  const std::size_t n = g.vertex_count();
  Rng rng(options.seed);
  LevelGraph level = level_from(g);
  std::vector<VertexId> membership(n);
  std::iota(membership.begin(), membership.end(), VertexId{0});
  DetectionResult result;

  for (;;) {
    std::vector<VertexId> community(level.size());
    std::iota(community.begin(), community.end(), VertexId{0});
    const bool moved = move_vertices(level, community, edges, options, rng);
    if (!moved) break;
    const std::size_t k = compact(community);
    for (auto& m : membership) m = community[m];
    result.pass_modularity.push_back(level_modularity(level, community, k, edges, options.resolution));
    level = aggregate(level, community, k);
  }

  if (result.pass_modularity.empty()) {
    result.pass_modularity.push_back(level_modularity(level, membership, level.size(), edges, options.resolution));
  }

  // Vertices with edges are numbered first so isolated singletons trail
  // among equal-sized groups after the size ordering.
  std::vector<GroupId> remap(level.size(), kInvalidVertex);
  std::vector<GroupId> assignment(n);
  GroupId next = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (VertexId v = 0; v < n; ++v) {
      if ((g.degree(v) == 0) != (pass == 1)) continue;
      GroupId& r = remap[membership[v]];
      if (r == kInvalidVertex) r = next++;
      assignment[v] = r;
    }
  }
  result.partition = relabel_by_size(Partition(std::move(assignment))).partition;
  return result;
}

}  // namespace polarnet
