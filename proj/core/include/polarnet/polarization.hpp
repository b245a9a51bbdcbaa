#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polarnet/graph.hpp"
#include "polarnet/partition.hpp"
#include "polarnet/temporal.hpp"
#include "polarnet/windows.hpp"

namespace polarnet {

inline constexpr double kDefaultModularityTolerance = 1e-12;

/// Newman modularity of `p` on `g`, computed per group as e_i/m - (D_i/2m)^2
/// where e_i counts in-group edges and D_i sums in-group degrees.
/// Throws UndefinedModularityError when g has no edges and ArgumentError
/// when p does not cover exactly g's vertices.
double modularity(const UndirectedView& g, const Partition& p);

/// Contribution Q_i of every group; the entries sum to modularity(g, p).
std::vector<double> group_contributions(const UndirectedView& g, const Partition& p);

double group_contribution(const UndirectedView& g, const Partition& p, GroupId group);

/// Q_i / Q. Throws DegenerateModularityError when |Q| <= tolerance.
double d_modularity(const UndirectedView& g, const Partition& p, GroupId group,
                    double tolerance = kDefaultModularityTolerance);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

struct SeriesPoint {
  double x;
  double y;
};

/// Ordinary least squares y = slope * x + intercept.
/// Throws ArgumentError with fewer than two distinct x values.
LinearFit linear_trend(std::span<const SeriesPoint> series);

struct WindowPolarization {
  TimeWindow window;
  std::size_t edge_count = 0;
  /// Undefined for windows without edges.
  std::optional<double> modularity;
  /// Q_i for every group; empty when modularity is undefined.
  std::vector<double> contributions;
  /// d_i per tracked group, aligned with PolarizationReport::tracked_groups.
  std::vector<std::optional<double>> d_values;
};

struct SeriesTrend {
  /// "Q", "Q_<g>" or "d_<g>".
  std::string series;
  LinearFit fit;
  std::size_t points = 0;
};

struct PolarizationReport {
  std::size_t group_count = 0;
  std::vector<GroupId> tracked_groups;
  std::vector<WindowPolarization> windows;
  /// Fits over window ordinals; windows without edges are skipped, and a
  /// series with fewer than two defined points gets no entry.
  std::vector<SeriesTrend> trends;

  const SeriesTrend* trend(const std::string& series) const;
};

/// Per-window Q, Q_i and d_i against a fixed global partition.
PolarizationReport window_series(const TemporalEdgeSet& edges, const Partition& p,
                                 std::span<const TimeWindow> windows,
                                 std::span<const GroupId> tracked_groups,
                                 double tolerance = kDefaultModularityTolerance);

}  // namespace polarnet
