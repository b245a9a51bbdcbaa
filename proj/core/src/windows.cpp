#include "polarnet/windows.hpp"

#include <algorithm>
#include <cstdio>

#include "polarnet/errors.hpp"
#include "polarnet/temporal.hpp"

namespace polarnet {

namespace {

Timestamp floor_div(Timestamp a, Timestamp b) {
  Timestamp q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

TimeWindow::TimeWindow(Timestamp start_, Timestamp end_, std::string label_)
    : start(start_), end(end_), label(std::move(label_)) {
  if (!(start < end)) {
    throw ArgumentError("time window requires start < end, got [" + std::to_string(start) + ", " +
                        std::to_string(end) + ")");
  }
}

std::string utc_date(Timestamp t) {
  // Days-to-civil conversion on the proleptic Gregorian calendar.
  const Timestamp z = floor_div(t, 86400) + 719468;
  const Timestamp era = floor_div(z, 146097);
  const Timestamp doe = z - era * 146097;
  const Timestamp yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const Timestamp doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const Timestamp mp = (5 * doy + 2) / 153;
  const Timestamp day = doy - (153 * mp + 2) / 5 + 1;
  const Timestamp month = mp < 10 ? mp + 3 : mp - 9;
  const Timestamp year = yoe + era * 400 + (month <= 2 ? 1 : 0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04lld-%02lld-%02lld", static_cast<long long>(year),
                static_cast<long long>(month), static_cast<long long>(day));
  return buf;
}

std::vector<TimeWindow> slice_windows(const TemporalEdgeSet& edges, Timestamp granularity, Timestamp origin) {
  if (granularity <= 0) throw ArgumentError("window granularity must be positive");
  std::vector<TimeWindow> windows;
  if (edges.arcs.empty()) return windows;
  const auto [lo, hi] = std::minmax_element(edges.arcs.begin(), edges.arcs.end(),
                                            [](const TemporalArc& a, const TemporalArc& b) { return a.timestamp < b.timestamp; });
  const Timestamp first = floor_div(lo->timestamp - origin, granularity);
  const Timestamp last = floor_div(hi->timestamp - origin, granularity);
  const bool whole_days = granularity % 86400 == 0;
  // Origins that are not UTC midnight stand for a local midnight; label by
  // the local date, reading offsets beyond 12 h as east of UTC.
  const Timestamp midnight = origin - floor_div(origin, 86400) * 86400;
  const Timestamp shift = midnight <= 43200 ? -midnight : 86400 - midnight;
  windows.reserve(static_cast<std::size_t>(last - first + 1));
  for (Timestamp k = first; k <= last; ++k) {
    const Timestamp start = origin + k * granularity;
    windows.emplace_back(start, start + granularity, whole_days ? utc_date(start + shift) : std::to_string(start));
  }
  return windows;
}

}  // namespace polarnet
