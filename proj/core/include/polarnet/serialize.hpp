#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "polarnet/domination.hpp"
#include "polarnet/polarization.hpp"
#include "polarnet/temporal.hpp"

namespace polarnet {

/// Shortest round-trip decimal form; "nan"/"inf" never occur in reports.
std::string format_number(double value);

/// label,m,Q then Q_g,d_g per tracked group, or Q_0..Q_{k-1} when no group
/// is tracked. Undefined values are empty fields.
void write_polarization_csv(const PolarizationReport& report, std::ostream& out);
nlohmann::json polarization_json(const PolarizationReport& report);

/// step,vertex,covered,fraction with one row per pick.
void write_domination_csv(const DominationResult& result, const LabelIndex& labels, std::ostream& out);
nlohmann::json domination_json(const DominationResult& result, const LabelIndex& labels);

/// spreaders,fraction
void write_curve_csv(std::span<const CurvePoint> curve, std::ostream& out);
nlohmann::json curve_json(std::span<const CurvePoint> curve);

}  // namespace polarnet
