#include "polarnet/polarization.hpp"

#include <algorithm>
#include <cmath>

#include "polarnet/errors.hpp"

namespace polarnet {

namespace {

void check_cover(const UndirectedView& g, const Partition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw ArgumentError("partition covers " + std::to_string(p.vertex_count()) + " vertices but the graph has " +
                        std::to_string(g.vertex_count()));
  }
  if (g.edge_count() == 0) throw UndefinedModularityError("modularity is undefined for a graph without edges");
}

void check_group(const Partition& p, GroupId group) {
  if (group >= p.group_count()) {
    throw ArgumentError("group index " + std::to_string(group) + " out of range for " +
                        std::to_string(p.group_count()) + " groups");
  }
}

}  // namespace

std::vector<double> group_contributions(const UndirectedView& g, const Partition& p) {
  check_cover(g, p);
  const std::size_t k = p.group_count();
  std::vector<std::size_t> in_edges(k, 0);
  std::vector<std::size_t> degree_sum(k, 0);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const GroupId gu = p.group_of(u);
    degree_sum[gu] += g.degree(u);
    for (VertexId v : g.neighbors(u)) {
      if (u < v && p.group_of(v) == gu) ++in_edges[gu];
    }
  }
  const double m = static_cast<double>(g.edge_count());
  std::vector<double> q(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double share = static_cast<double>(degree_sum[i]) / (2.0 * m);
    q[i] = static_cast<double>(in_edges[i]) / m - share * share;
  }
  return q;
}

double modularity(const UndirectedView& g, const Partition& p) {
  const auto q = group_contributions(g, p);
  double total = 0.0;
  for (double qi : q) total += qi;
  return total;
}

double group_contribution(const UndirectedView& g, const Partition& p, GroupId group) {
  check_cover(g, p);
  check_group(p, group);
  return group_contributions(g, p)[group];
}

double d_modularity(const UndirectedView& g, const Partition& p, GroupId group, double tolerance) {
  check_cover(g, p);
  check_group(p, group);
  const auto q = group_contributions(g, p);
  double total = 0.0;
  for (double qi : q) total += qi;
  if (!(std::abs(total) > tolerance)) {
    throw DegenerateModularityError(total, "d-modularity undefined: |Q| = " + std::to_string(std::abs(total)) +
                                               " is within tolerance");
  }
  return q[group] / total;
}

LinearFit linear_trend(std::span<const SeriesPoint> series) {
  if (series.size() < 2) throw ArgumentError("linear trend needs at least two points");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& pt : series) {
    mean_x += pt.x;
    mean_y += pt.y;
  }
  mean_x /= static_cast<double>(series.size());
  mean_y /= static_cast<double>(series.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& pt : series) {
    sxx += (pt.x - mean_x) * (pt.x - mean_x);
    sxy += (pt.x - mean_x) * (pt.y - mean_y);
  }
  if (sxx == 0.0) throw ArgumentError("linear trend needs at least two distinct x values");
  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x};
}

const SeriesTrend* PolarizationReport::trend(const std::string& series) const {
  for (const auto& t : trends) {
    if (t.series == series) return &t;
  }
  return nullptr;
}

PolarizationReport window_series(const TemporalEdgeSet& edges, const Partition& p,
                                 std::span<const TimeWindow> windows, std::span<const GroupId> tracked_groups,
                                 double tolerance) {
  const std::size_t n = edges.vertex_count();
  if (p.vertex_count() != n) {
    throw ArgumentError("partition covers " + std::to_string(p.vertex_count()) + " vertices but the edge set has " +
                        std::to_string(n));
  }
  for (GroupId g : tracked_groups) check_group(p, g);

  PolarizationReport report;
  report.group_count = p.group_count();
  report.tracked_groups.assign(tracked_groups.begin(), tracked_groups.end());

  std::vector<TemporalArc> sorted(edges.arcs);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const TemporalArc& a, const TemporalArc& b) { return a.timestamp < b.timestamp; });
  const auto by_time = [](const TemporalArc& a, Timestamp t) { return a.timestamp < t; };

  for (const auto& window : windows) {
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), window.start, by_time);
    const auto last = std::lower_bound(first, sorted.end(), window.end, by_time);
    const auto view = underlying_undirected(build_directed_graph(n, std::span<const TemporalArc>(first, last)));

    WindowPolarization entry{window, view.edge_count(), std::nullopt, {}, {}};
    entry.d_values.assign(tracked_groups.size(), std::nullopt);
    if (view.edge_count() > 0) {
      entry.contributions = group_contributions(view, p);
      double q = 0.0;
      for (double qi : entry.contributions) q += qi;
      entry.modularity = q;
      if (std::abs(q) > tolerance) {
        for (std::size_t j = 0; j < tracked_groups.size(); ++j) {
          entry.d_values[j] = entry.contributions[tracked_groups[j]] / q;
        }
      }
    }
    report.windows.push_back(std::move(entry));
  }

  const auto fit = [&](std::string name, auto&& value) {
    std::vector<SeriesPoint> points;
    for (std::size_t w = 0; w < report.windows.size(); ++w) {
      if (auto y = value(report.windows[w])) points.push_back({static_cast<double>(w), *y});
    }
    if (points.size() < 2) return;
    report.trends.push_back({std::move(name), linear_trend(points), points.size()});
  };

  fit("Q", [](const WindowPolarization& w) { return w.modularity; });
  std::vector<GroupId> shown(tracked_groups.begin(), tracked_groups.end());
  if (shown.empty()) {
    for (GroupId g = 0; g < p.group_count(); ++g) shown.push_back(g);
  }
  for (GroupId g : shown) {
    fit("Q_" + std::to_string(g), [g](const WindowPolarization& w) -> std::optional<double> {
      if (w.contributions.empty()) return std::nullopt;
      return w.contributions[g];
    });
  }
  for (std::size_t j = 0; j < tracked_groups.size(); ++j) {
    fit("d_" + std::to_string(tracked_groups[j]), [j](const WindowPolarization& w) { return w.d_values[j]; });
  }
  return report;
}

}  // namespace polarnet
