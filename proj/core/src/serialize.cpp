#include "polarnet/serialize.hpp"

#include <charconv>
#include <ostream>

namespace polarnet {

std::string format_number(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(value);
}

namespace {

std::vector<GroupId> shown_groups(const PolarizationReport& report) {
  if (!report.tracked_groups.empty()) return report.tracked_groups;
  std::vector<GroupId> all(report.group_count);
  for (GroupId g = 0; g < all.size(); ++g) all[g] = g;
  return all;
}

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void write_polarization_csv(const PolarizationReport& report, std::ostream& out) {
  const auto groups = shown_groups(report);
  const bool tracked = !report.tracked_groups.empty();
  out << "label,m,Q";
  for (GroupId g : groups) {
    out << ",Q_" << g;
    if (tracked) out << ",d_" << g;
  }
  out << '\n';
  for (const auto& w : report.windows) {
    out << w.window.label << ',' << w.edge_count << ',';
    if (w.modularity) out << format_number(*w.modularity);
    for (std::size_t j = 0; j < groups.size(); ++j) {
      out << ',';
      if (!w.contributions.empty()) out << format_number(w.contributions[groups[j]]);
      if (tracked) {
        out << ',';
        if (w.d_values[j]) out << format_number(*w.d_values[j]);
      }
    }
    out << '\n';
  }
}

nlohmann::json polarization_json(const PolarizationReport& report) {
  nlohmann::json doc;
  doc["group_count"] = report.group_count;
  doc["tracked_groups"] = report.tracked_groups;
  auto& windows = doc["windows"] = nlohmann::json::array();
  for (const auto& w : report.windows) {
    nlohmann::json entry{{"label", w.window.label},
                         {"start", w.window.start},
                         {"end", w.window.end},
                         {"m", w.edge_count},
                         {"Q", optional_number(w.modularity)}};
    entry["Q_i"] = w.contributions.empty() ? nlohmann::json(nullptr) : nlohmann::json(w.contributions);
    if (!report.tracked_groups.empty()) {
      auto& d = entry["d_i"] = nlohmann::json::object();
      for (std::size_t j = 0; j < report.tracked_groups.size(); ++j) {
        d[std::to_string(report.tracked_groups[j])] = optional_number(w.d_values[j]);
      }
    }
    windows.push_back(std::move(entry));
  }
  auto& trends = doc["trends"] = nlohmann::json::array();
  for (const auto& t : report.trends) {
    trends.push_back({{"series", t.series}, {"slope", t.fit.slope}, {"intercept", t.fit.intercept}, {"points", t.points}});
  }
  return doc;
}

void write_domination_csv(const DominationResult& result, const LabelIndex& labels, std::ostream& out) {
  out << "step,vertex,covered,fraction\n";
  for (std::size_t i = 0; i < result.selected.size(); ++i) {
    const double fraction = result.n_target == 0 ? 1.0
                                                 : static_cast<double>(result.covered_after_step[i]) /
                                                       static_cast<double>(result.n_target);
    out << i + 1 << ',' << labels.label(result.selected[i]) << ',' << result.covered_after_step[i] << ','
        << format_number(fraction) << '\n';
  }
}

nlohmann::json domination_json(const DominationResult& result, const LabelIndex& labels) {
  nlohmann::json selected = nlohmann::json::array();
  for (VertexId v : result.selected) selected.push_back(labels.label(v));
  return {{"feasible", true},
          {"rho", result.rho},
          {"target", result.target},
          {"n_target", result.n_target},
          {"candidates", result.candidates},
          {"selected", std::move(selected)},
          {"covered_after_step", result.covered_after_step},
          {"covered", result.covered()},
          {"fraction", result.covered_fraction()}};
}

void write_curve_csv(std::span<const CurvePoint> curve, std::ostream& out) {
  out << "spreaders,fraction\n";
  for (const auto& pt : curve) out << pt.spreaders << ',' << format_number(pt.fraction) << '\n';
}

nlohmann::json curve_json(std::span<const CurvePoint> curve) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& pt : curve) points.push_back({{"spreaders", pt.spreaders}, {"fraction", pt.fraction}});
  return points;
}

}  // namespace polarnet
