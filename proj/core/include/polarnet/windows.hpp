#pragma once

#include <string>
#include <vector>

#include "polarnet/types.hpp"

namespace polarnet {

struct TemporalEdgeSet;

/// Half-open interval [start, end) of timestamps.
struct TimeWindow {
  Timestamp start = 0;
  Timestamp end = 0;
  std::string label;

  /// Throws ArgumentError unless start < end.
  TimeWindow(Timestamp start, Timestamp end, std::string label = {});

  bool contains(Timestamp t) const noexcept { return start <= t && t < end; }
  Timestamp length() const noexcept { return end - start; }

  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// Consecutive windows of `granularity` seconds aligned to `origin`,
/// covering every arc timestamp. When the granularity is a whole number of
/// days, labels are the calendar dates of the local midnights that `origin`
/// marks (origin 0 = UTC); otherwise the start timestamp.
std::vector<TimeWindow> slice_windows(const TemporalEdgeSet& edges, Timestamp granularity, Timestamp origin = 0);

/// "YYYY-MM-DD" for the UTC day containing `t`.
std::string utc_date(Timestamp t);

}  // namespace polarnet
