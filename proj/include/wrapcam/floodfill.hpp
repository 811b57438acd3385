#pragma once

#include "wrapcam/edges.hpp"
#include "wrapcam/image.hpp"

namespace wrapcam {

struct FloodFillResult {
  WindingMap winding;
  long conflicts = 0;        // pixels re-reached with a different implied label
  long negative_clamps = 0;  // labels still negative after anchoring
};

// Quality-guided region growing. Each channel is labeled independently:
// BFS starts at the pixel of minimum sensor value (ties by row-major
// index) with label 0; crossing an unmarked boundary copies the label,
// crossing a marked boundary adds its sign. Components are then anchored
// by shifting labels so each component's minimum is zero (the darkest
// pixel of a component is taken as unwrapped); any label still negative
// is clamped to zero and counted. Re-reaching a pixel with a different
// label keeps the first visit and increments the conflict counter.
FloodFillResult unwrap_floodfill(const SensorImage& sensor,
                                 const WrapEdgeMask& edges);

}  // namespace wrapcam
