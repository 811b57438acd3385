#include "wrapcam/edges.hpp"

#include <cmath>
#include <stdexcept>

namespace wrapcam {

long WrapEdgeMask::marked_count() const {
  long n = 0;
  for (std::int8_t v : horizontal) n += v != 0;
  for (std::int8_t v : vertical) n += v != 0;
  return n;
}

WrapEdgeMask detect_wrap_edges(const SensorImage& sensor, double tau) {
  const double i_max = sensor.params.i_max;
  if (tau <= 0.0) tau = 0.5 * i_max;
  if (!(tau > 0.0) || !(tau < i_max))
    throw std::invalid_argument("detect_wrap_edges: tau must lie in (0, i_max)");

  WrapEdgeMask mask(sensor.width, sensor.height, sensor.channels);
  for (int c = 0; c < sensor.channels; ++c) {
    for (int y = 0; y < sensor.height; ++y) {
      for (int x = 0; x + 1 < sensor.width; ++x) {
        const double d = sensor.at(x + 1, y, c) - sensor.at(x, y, c);
        if (std::fabs(d) > tau)
          mask.horizontal[mask.h_index(x, y, c)] = d < 0 ? 1 : -1;
      }
    }
    for (int y = 0; y + 1 < sensor.height; ++y) {
      for (int x = 0; x < sensor.width; ++x) {
        const double d = sensor.at(x, y + 1, c) - sensor.at(x, y, c);
        if (std::fabs(d) > tau)
          mask.vertical[mask.v_index(x, y, c)] = d < 0 ? 1 : -1;
      }
    }
  }
  return mask;
}

WrapEdgeMask edges_from_winding(const WindingMap& winding) {
  WrapEdgeMask mask(winding.width, winding.height, winding.channels);
  for (int c = 0; c < winding.channels; ++c) {
    for (int y = 0; y < winding.height; ++y) {
      for (int x = 0; x + 1 < winding.width; ++x) {
        const std::int32_t dw = winding.at(x + 1, y, c) - winding.at(x, y, c);
        if (dw != 0)
          mask.horizontal[mask.h_index(x, y, c)] = dw > 0 ? 1 : -1;
      }
    }
    for (int y = 0; y + 1 < winding.height; ++y) {
      for (int x = 0; x < winding.width; ++x) {
        const std::int32_t dw = winding.at(x, y + 1, c) - winding.at(x, y, c);
        if (dw != 0)
          mask.vertical[mask.v_index(x, y, c)] = dw > 0 ? 1 : -1;
      }
    }
  }
  return mask;
}

}  // namespace wrapcam
