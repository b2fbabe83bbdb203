#pragma once

#include <string>

#include "nok/nob.hpp"

namespace nok {

/// One "t,s" line per vertex, exact fractions, counterclockwise from the
/// lexicographically least vertex. This is the golden output format.
std::string polygon_csv(const NOBPolygon& poly);

/// 640x480 drawing of the polygon with axes and the α/β graphs. Purely
/// presentational (coordinates are rounded for display).
std::string polygon_svg(const NOBPolygon& poly);

}  // namespace nok
