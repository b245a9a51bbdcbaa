#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace polarnet::oracle {

double modularity_double_sum(const UndirectedView& g, std::span<const GroupId> assignment) {
  const std::size_t n = g.vertex_count();
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double sum = 0.0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (assignment[u] != assignment[v]) continue;
      const double a = g.has_edge(u, v) ? 1.0 : 0.0;
      sum += a - static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)) / two_m;
    }
  }
  return sum / two_m;
}

double group_term_double_sum(const UndirectedView& g, std::span<const GroupId> assignment, GroupId group) {
  const std::size_t n = g.vertex_count();
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double sum = 0.0;
  for (VertexId u = 0; u < n; ++u) {
    if (assignment[u] != group) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (assignment[v] != group) continue;
      const double a = g.has_edge(u, v) ? 1.0 : 0.0;
      sum += a - static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v)) / two_m;
    }
  }
  return sum / two_m;
}

double max_modularity_brute_force(const UndirectedView& g) {
  const std::size_t n = g.vertex_count();
  std::vector<GroupId> rgs(n, 0);
  double best = -1.0;
  // Restricted growth strings enumerate each set partition once.
  std::function<void(std::size_t, GroupId)> rec = [&](std::size_t i, GroupId used) {
    if (i == n) {
      best = std::max(best, modularity_double_sum(g, rgs));
      return;
    }
    for (GroupId c = 0; c <= used; ++c) {
      rgs[i] = c;
      rec(i + 1, c == used ? used + 1 : used);
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 1);
  }
  return best;
}

std::vector<RefRecord> parse_lines_reference(const std::string& text) {
  std::vector<RefRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 3) continue;
    try {
      std::size_t used = 0;
      const long long ts = std::stoll(fields[2], &used);
      if (used != fields[2].size() || ts < 0) continue;
      out.push_back({fields[0], fields[1], ts});
    } catch (...) {
      continue;
    }
  }
  return out;
}

std::size_t distinct_pairs(const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  std::set<std::pair<VertexId, VertexId>> s;
  for (const auto& a : arcs) {
    if (a.first != a.second) s.insert(a);
  }
  return s.size();
}

std::set<std::pair<VertexId, VertexId>> filter_arcs(const DirectedGraph& g, const std::set<VertexId>& keep) {
  std::set<std::pair<VertexId, VertexId>> out;
  for (const auto& a : g.arc_list()) {
    if (keep.count(a.first) && keep.count(a.second)) out.insert(a);
  }
  return out;
}

std::pair<double, double> normal_equations_fit(const std::vector<double>& x, const std::vector<double>& y) {
  // [sum x^2  sum x] [a]   [sum xy]
  // [sum x    n    ] [b] = [sum y ]
  double sxx = 0, sx = 0, sxy = 0, sy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += x[i] * x[i];
    sx += x[i];
    sxy += x[i] * y[i];
    sy += y[i];
  }
  const double det = sxx * n - sx * sx;
  const double slope = (sxy * n - sx * sy) / det;
  const double intercept = (sxx * sy - sx * sxy) / det;
  return {slope, intercept};
}

double best_match_agreement(std::span<const GroupId> truth, std::span<const GroupId> found) {
  GroupId kt = 0, kf = 0;
  for (auto t : truth) kt = std::max<GroupId>(kt, t + 1);
  for (auto f : found) kf = std::max<GroupId>(kf, f + 1);
  std::vector<std::vector<std::size_t>> overlap(kt, std::vector<std::size_t>(kf, 0));
  for (std::size_t v = 0; v < truth.size(); ++v) ++overlap[truth[v]][found[v]];
  std::vector<char> taken(kf, 0);
  std::size_t best = 0;
  std::function<void(GroupId, std::size_t)> rec = [&](GroupId t, std::size_t acc) {
    if (t == kt) {
      best = std::max(best, acc);
      return;
    }
    rec(t + 1, acc);  // truth group left unmatched
    for (GroupId f = 0; f < kf; ++f) {
      if (taken[f]) continue;
      taken[f] = 1;
      rec(t + 1, acc + overlap[t][f]);
      taken[f] = 0;
    }
  };
  rec(0, 0);
  return static_cast<double>(best) / static_cast<double>(truth.size());
}

std::size_t closed_reach(const DirectedGraph& g, VertexId v, const std::set<VertexId>& targets) {
  std::set<VertexId> reach;
  if (targets.count(v)) reach.insert(v);
  for (const auto& [s, t] : g.arc_list()) {
    if (s == v && targets.count(t)) reach.insert(t);
  }
  return reach.size();
}

std::set<VertexId> covered_by(const DirectedGraph& g, std::span<const VertexId> picked, const std::set<VertexId>& targets) {
  std::set<VertexId> out;
  const std::set<VertexId> chosen(picked.begin(), picked.end());
  for (VertexId v : chosen) {
    if (targets.count(v)) out.insert(v);
  }
  for (const auto& [s, t] : g.arc_list()) {
    if (chosen.count(s) && targets.count(t)) out.insert(t);
  }
  return out;
}

DirectedGraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && coin(gen)) arcs.emplace_back(u, v);
    }
  }
  return DirectedGraph::from_arcs(n, arcs);
}

UndirectedView random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(gen)) edges.emplace_back(u, v);
    }
  }
  return UndirectedView::from_edges(n, edges);
}

std::vector<GroupId> random_assignment(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<GroupId> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<GroupId>(i < k ? i : gen() % k);
  std::shuffle(a.begin(), a.end(), gen);
  return a;
}

}  // namespace polarnet::oracle
