#pragma once

#include <filesystem>
#include <span>
#include <string_view>

#include "ghseq/correlation.hpp"
#include "ghseq/harness.hpp"

namespace ghseq {

// Standalone SVG line plot of a correlation series: axes, a single polyline
// (one vertex per lag), title. Byte-identical output for identical inputs.
void emit_svg_plot(const CorrelationSeries& series, std::string_view title,
                   const std::filesystem::path& path);

// Same, for comparison rows: one polyline per peak column (three in total),
// x positions from the row lengths.
void emit_svg_plot(std::span<const ComparisonRow> rows, std::string_view title,
                   const std::filesystem::path& path);

} // namespace ghseq
