#pragma once

#include <cstdint>
#include <vector>

#include "wrapcam/image.hpp"

namespace wrapcam {

// Per-pixel-boundary wrap discontinuities. horizontal[(y*(width-1)+x)*C+c]
// covers the boundary between (x, y) and (x+1, y); vertical covers (x, y)
// to (x, y+1). Entries are 0 (unmarked) or +/-1: the winding change when
// crossing in the +x / +y direction.
struct WrapEdgeMask {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::int8_t> horizontal;  // (width-1) * height * channels
  std::vector<std::int8_t> vertical;    // width * (height-1) * channels

  WrapEdgeMask() = default;
  WrapEdgeMask(int w, int h, int c)
      : width(w), height(h), channels(c),
        horizontal(static_cast<std::size_t>(w > 0 ? w - 1 : 0) * h * c, 0),
        vertical(static_cast<std::size_t>(w) * (h > 0 ? h - 1 : 0) * c, 0) {}

  std::size_t h_index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * (width - 1) + x) * channels + c;
  }
  std::size_t v_index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  std::int8_t h_at(int x, int y, int c = 0) const { return horizontal[h_index(x, y, c)]; }
  std::int8_t v_at(int x, int y, int c = 0) const { return vertical[v_index(x, y, c)]; }

  long marked_count() const;
};

// Threshold detector: marks a boundary where the wrapped difference
// d = m[next] - m[prev] satisfies |d| > tau, with sign -sign(d) (a large
// observed drop means the winding increased). tau <= 0 selects the
// default i_max/2.
WrapEdgeMask detect_wrap_edges(const SensorImage& sensor, double tau = -1.0);

// Ground-truth mask derived from a winding map: a boundary is marked where
// W differs, with the sign of the change. Used to supervise external
// learners; boundaries with |dW| > 1 still carry only the sign.
WrapEdgeMask edges_from_winding(const WindingMap& winding);

}  // namespace wrapcam
