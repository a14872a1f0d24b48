#pragma once

#include <string>

#include "cpoly/dissect.hpp"

namespace cpoly {

/// SVG 1.1 document of one figure: its boundary path plus markers at every
/// corner point.  Output is deterministic per input.
std::string render_figure_svg(const ConvexChain& c);

/// Source and target panels side by side; pieces color-cycled, the same
/// color for a piece in both panels.
std::string render_dissection_svg(const Dissection& d);

}  // namespace cpoly
