#include "wrapcam/floodfill.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace wrapcam {

namespace {

constexpr std::int32_t kUnvisited = std::numeric_limits<std::int32_t>::min();

}  // namespace

FloodFillResult unwrap_floodfill(const SensorImage& sensor,
                                 const WrapEdgeMask& edges) {
  if (!same_shape(sensor, edges))
    throw std::invalid_argument("unwrap_floodfill: sensor/edges dimension mismatch");

  const int w = sensor.width;
  const int h = sensor.height;
  FloodFillResult result;
  result.winding = WindingMap(w, h, sensor.channels);

  for (int c = 0; c < sensor.channels; ++c) {
    std::vector<std::int32_t> label(static_cast<std::size_t>(w) * h, kUnvisited);
    auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };

    std::size_t remaining = label.size();
    while (remaining > 0) {
      // Seed the next component at its minimum sensor value, row-major ties.
      int seed_x = -1, seed_y = -1;
      double seed_v = std::numeric_limits<double>::infinity();
      for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
          if (label[idx(x, y)] != kUnvisited) continue;
          const double v = sensor.at(x, y, c);
          if (v < seed_v) {
            seed_v = v;
            seed_x = x;
            seed_y = y;
          }
        }
      }

      std::vector<std::size_t> component;
      std::queue<std::pair<int, int>> queue;
      label[idx(seed_x, seed_y)] = 0;
      component.push_back(idx(seed_x, seed_y));
      queue.emplace(seed_x, seed_y);
      --remaining;

      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop();
        const std::int32_t cur = label[idx(x, y)];

        // Neighbor order fixed for determinism: +x, -x, +y, -y.
        struct Step { int nx, ny; std::int32_t delta; };
        Step steps[4];
        int n_steps = 0;
        if (x + 1 < w)
          steps[n_steps++] = {x + 1, y, edges.h_at(x, y, c)};
        if (x > 0)
          steps[n_steps++] = {x - 1, y, static_cast<std::int32_t>(-edges.h_at(x - 1, y, c))};
        if (y + 1 < h)
          steps[n_steps++] = {x, y + 1, edges.v_at(x, y, c)};
        if (y > 0)
          steps[n_steps++] = {x, y - 1, static_cast<std::int32_t>(-edges.v_at(x, y - 1, c))};

        for (int s = 0; s < n_steps; ++s) {
          const auto& st = steps[s];
          const std::int32_t implied = cur + st.delta;
          std::int32_t& nb = label[idx(st.nx, st.ny)];
          if (nb == kUnvisited) {
            nb = implied;
            component.push_back(idx(st.nx, st.ny));
            queue.emplace(st.nx, st.ny);
            --remaining;
          } else if (nb != implied) {
            ++result.conflicts;  // inconsistent cycle; first visit wins
          }
        }
      }

      // Anchor the component: its darkest pixel is assumed unwrapped.
      std::int32_t lo = std::numeric_limits<std::int32_t>::max();
      for (std::size_t i : component) lo = std::min(lo, label[i]);
      for (std::size_t i : component) {
        std::int32_t v = label[i] - lo;
        if (v < 0) {  // unreachable after the shift; kept as a safety net
          v = 0;
          ++result.negative_clamps;
        }
        label[i] = v;
      }
    }

    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        result.winding.at(x, y, c) = label[idx(x, y)];
  }
  return result;
}

}  // namespace wrapcam
