#pragma once

#include <string>
#include <vector>

#include "ridgepath/trace.hpp"

namespace ridgepath {

enum class TraceKind { coef, risk };

// Fixed 720x480 SVG: one polyline per variable (vertex count equals the grid
// size), dashed vertical marker at mStar (omitted when mStar is NaN), axis
// ticks and labels, small legend. Output bytes depend only on the inputs.
// `names` labels the legend; when it does not match p, v1..vp is used.
void write_trace_svg(const TraceSeries& t, TraceKind kind,
                     const std::string& path,
                     const std::vector<std::string>& names = {});

}  // namespace ridgepath
