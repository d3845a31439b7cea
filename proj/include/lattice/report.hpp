#pragma once

#include <optional>
#include <string>

#include "lattice/duality.hpp"
#include "lattice/oracle.hpp"

namespace lattice {

inline constexpr const char* kReportSchema = "report v1";

/// Duality report as JSON (schema "report v1"). Corner lists are closed walks
/// (first corner repeated at the end) in canonical orientation, in doubled
/// coordinates. `timing_ms` is included only when given, so default output
/// is byte-identical across runs.
std::string duality_json(const DualityReport& report, const Verdicts& checks,
                         std::optional<double> timing_ms = std::nullopt);

/// Components of the origin and their outermost boundaries.
std::string analysis_json(const GridConfig& grid);

std::string enumeration_json(const EnumSpec& spec, const EnumResult& result);
std::string mc_json(const McSpec& spec, const McStats& stats);
std::string verdicts_json(const GridOutcome& outcome);

/// SVG 1.1 drawing, 20 user units per square, y pointing up. Occupied
/// squares are dark grey, candidate vacant squares dotted, the component
/// boundary solid and the ring boundary bold. `report` may be absent when the
/// grid is out of scope for the duality construction.
std::string render_svg(const GridConfig& grid, const DualityReport* report);

}  // namespace lattice
