#pragma once

#include <string>

#include "spreadlab/scan.hpp"

namespace spreadlab {

/// Header "x,f" then one row per sample, 17 significant digits.
[[nodiscard]] std::string render_csv(const ScanTable& table);

/// Standalone SVG 1.1 line plot of the table with a horizontal threshold line
/// and, when `markers` is non-empty, dashed verticals at its endpoints.
[[nodiscard]] std::string render_svg(const ScanTable& table, double threshold, const IntervalSet& markers);

} // namespace spreadlab
