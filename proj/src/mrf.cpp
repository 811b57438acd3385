#include "wrapcam/mrf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wrapcam/codec.hpp"
#include "wrapcam/edges.hpp"
#include "wrapcam/floodfill.hpp"
#include "wrapcam/maxflow.hpp"

namespace wrapcam {

void MrfConfig::validate(double i_max) const {
  if (max_label < 1)
    throw std::invalid_argument("mrf config: max_label must be >= 1");
  if (!(lambda > 0.0))
    throw std::invalid_argument("mrf config: lambda must be > 0");
  if (!(effective_trunc(i_max) > 0.0))
    throw std::invalid_argument("mrf config: trunc must be > 0");
  if (max_sweeps < 1)
    throw std::invalid_argument("mrf config: max_sweeps must be >= 1");
}

namespace {

struct GridEdge {
  int p, q;   // flat pixel indices within one channel
  double dm;  // m_q - m_p
};

double pair_cost(double dm, int wp, int wq, double i_max, double trunc) {
  const double u = dm + static_cast<double>(wq - wp) * i_max;
  return std::min(std::fabs(u), trunc);
}

double labeling_energy(const std::vector<GridEdge>& edges,
                       const std::vector<std::int32_t>& labels, double i_max,
                       double trunc, double lambda) {
  double e = 0.0;
  for (const GridEdge& ge : edges)
    e += pair_cost(ge.dm, labels[ge.p], labels[ge.q], i_max, trunc);
  return lambda * e;
}

// One alpha-expansion move solved as a binary min-cut. Returns the
// proposed labeling; the caller decides acceptance by true energy.
std::vector<std::int32_t> expansion_move(const std::vector<GridEdge>& edges,
                                         const std::vector<std::int32_t>& labels,
                                         int n_pixels, int alpha, double i_max,
                                         double trunc, double lambda) {
  const int source = n_pixels;    // side of "keep current label"
  const int sink = n_pixels + 1;  // side of "take label alpha"
  MaxFlowGraph graph(n_pixels + 2);

  std::vector<double> cost_keep(n_pixels, 0.0);
  std::vector<double> cost_switch(n_pixels, 0.0);

  for (const GridEdge& ge : edges) {
    const double t00 = lambda * pair_cost(ge.dm, labels[ge.p], labels[ge.q], i_max, trunc);
    const double t01 = lambda * pair_cost(ge.dm, labels[ge.p], alpha, i_max, trunc);
    const double t10 = lambda * pair_cost(ge.dm, alpha, labels[ge.q], i_max, trunc);
    const double t11 = lambda * pair_cost(ge.dm, alpha, alpha, i_max, trunc);

    // Decompose theta into t-links plus one directed edge of weight
    // B = t01 + t10 - t00 - t11. Terms with B < 0 are non-submodular; the
    // t00 leg is lowered to keep capacities valid, which only widens the
    // set of proposed moves (acceptance is checked on the true energy).
    const double t00_adj = std::min(t00, t01 + t10 - t11);
    const double b = t01 + t10 - t00_adj - t11;

    cost_switch[ge.p] += t10 - t00_adj;
    cost_switch[ge.q] += t11 - t10;
    if (b > 0.0) graph.add_edge(ge.p, ge.q, b);
  }

  for (int p = 0; p < n_pixels; ++p) {
    // Shift so both terminal capacities are nonnegative.
    const double base = std::min(cost_keep[p], cost_switch[p]);
    const double keep = cost_keep[p] - base;
    const double sw = cost_switch[p] - base;
    if (sw > 0.0) graph.add_edge(source, p, sw);
    if (keep > 0.0) graph.add_edge(p, sink, keep);
  }

  graph.solve(source, sink);

  std::vector<std::int32_t> proposal(labels);
  for (int p = 0; p < n_pixels; ++p)
    if (!graph.on_source_side(p)) proposal[p] = alpha;
  return proposal;
}

}  // namespace

double mrf_energy(const SensorImage& sensor, const WindingMap& winding,
                  const MrfConfig& config) {
  if (!same_shape(sensor, winding))
    throw std::invalid_argument("mrf_energy: dimension mismatch");
  config.validate(sensor.params.i_max);
  const double i_max = sensor.params.i_max;
  const double trunc = config.effective_trunc(i_max);

  double e = 0.0;
  for (int c = 0; c < sensor.channels; ++c) {
    for (int y = 0; y < sensor.height; ++y)
      for (int x = 0; x + 1 < sensor.width; ++x)
        e += pair_cost(sensor.at(x + 1, y, c) - sensor.at(x, y, c),
                       winding.at(x, y, c), winding.at(x + 1, y, c), i_max, trunc);
    for (int y = 0; y + 1 < sensor.height; ++y)
      for (int x = 0; x < sensor.width; ++x)
        e += pair_cost(sensor.at(x, y + 1, c) - sensor.at(x, y, c),
                       winding.at(x, y, c), winding.at(x, y + 1, c), i_max, trunc);
  }
  return config.lambda * e;
}

MrfResult unwrap_mrf(const SensorImage& sensor, const MrfConfig& config) {
  config.validate(sensor.params.i_max);
  const double i_max = sensor.params.i_max;
  const double trunc = config.effective_trunc(i_max);
  const int w = sensor.width;
  const int h = sensor.height;
  const int n_pixels = w * h;
  auto flat = [w](int x, int y) { return y * w + x; };

  const WrapEdgeMask detected = detect_wrap_edges(sensor);
  const FloodFillResult init = unwrap_floodfill(sensor, detected);

  MrfResult result;
  result.winding = WindingMap(w, h, sensor.channels);

  // Per-channel grids; sweeps run interleaved so the recorded energy is
  // the global one and stays nonincreasing across sweeps.
  std::vector<std::vector<GridEdge>> edges(sensor.channels);
  std::vector<std::vector<std::int32_t>> labels(sensor.channels);
  std::vector<double> energy(sensor.channels, 0.0);

  for (int c = 0; c < sensor.channels; ++c) {
    edges[c].reserve(static_cast<std::size_t>(2) * n_pixels);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x + 1 < w; ++x)
        edges[c].push_back({flat(x, y), flat(x + 1, y),
                            sensor.at(x + 1, y, c) - sensor.at(x, y, c)});
    for (int y = 0; y + 1 < h; ++y)
      for (int x = 0; x < w; ++x)
        edges[c].push_back({flat(x, y), flat(x, y + 1),
                            sensor.at(x, y + 1, c) - sensor.at(x, y, c)});

    labels[c].resize(n_pixels);
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        std::int32_t v = init.winding.at(x, y, c);
        if (v > config.max_label) {
          v = config.max_label;
          ++result.clamped_init;
        }
        labels[c][flat(x, y)] = v;
      }
    }
    energy[c] = labeling_energy(edges[c], labels[c], i_max, trunc, config.lambda);
    result.initial_energy += energy[c];
  }

  for (int sweep = 0; sweep < config.max_sweeps; ++sweep) {
    bool improved = false;
    for (int c = 0; c < sensor.channels; ++c) {
      for (int alpha = 0; alpha <= config.max_label; ++alpha) {
        std::vector<std::int32_t> proposal = expansion_move(
            edges[c], labels[c], n_pixels, alpha, i_max, trunc, config.lambda);
        const double proposed =
            labeling_energy(edges[c], proposal, i_max, trunc, config.lambda);
        if (proposed < energy[c] - 1e-12) {
          labels[c].swap(proposal);
          energy[c] = proposed;
          improved = true;
        }
      }
    }
    double total = 0.0;
    for (double e : energy) total += e;
    result.sweep_energies.push_back(total);
    result.sweeps_run = sweep + 1;
    if (!improved) break;
  }

  result.final_energy = 0.0;
  for (double e : energy) result.final_energy += e;
  for (int c = 0; c < sensor.channels; ++c)
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        result.winding.at(x, y, c) = labels[c][flat(x, y)];

  // Residual wrap edges whose both endpoints sit at the label ceiling
  // indicate the scene exceeds max_label.
  for (int c = 0; c < sensor.channels; ++c) {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x + 1 < w; ++x)
        if (detected.h_at(x, y, c) != 0 &&
            result.winding.at(x, y, c) == config.max_label &&
            result.winding.at(x + 1, y, c) == config.max_label)
          ++result.ceiling_edges;
    for (int y = 0; y + 1 < h; ++y)
      for (int x = 0; x < w; ++x)
        if (detected.v_at(x, y, c) != 0 &&
            result.winding.at(x, y, c) == config.max_label &&
            result.winding.at(x, y + 1, c) == config.max_label)
          ++result.ceiling_edges;
  }
  return result;
}

}  // namespace wrapcam
