#pragma once

#include <vector>

#include "wrapcam/image.hpp"

namespace wrapcam {

struct MrfConfig {
  int max_label = 16;     // W_max, >= 1
  double lambda = 1.0;    // smoothness weight, > 0
  double trunc = -1.0;    // pairwise truncation; <= 0 selects 2 * i_max
  int max_sweeps = 8;     // alpha-expansion passes, >= 1

  void validate(double i_max) const;
  double effective_trunc(double i_max) const {
    return trunc > 0.0 ? trunc : 2.0 * i_max;
  }
};

struct MrfResult {
  WindingMap winding;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  std::vector<double> sweep_energies;  // energy after each completed sweep
  int sweeps_run = 0;
  long ceiling_edges = 0;   // detected wrap edges between two W_max pixels
  long clamped_init = 0;    // flood-fill labels truncated into [0, W_max]
};

// Multi-label winding recovery by alpha-expansion. Minimizes
//   E(W) = lambda * sum_{(p,q)} min(|u_p - u_q|, trunc),
// u = m + W * i_max, over labels {0..max_label}; the data term is uniform.
// Each expansion is solved exactly by max-flow/min-cut; non-submodular
// pairwise terms (labels straddling the expansion label) are truncated in
// the graph and a move is kept only when the true energy decreases, so the
// energy is nonincreasing across sweeps by construction. Initialization is
// the flood-fill labeling. Channels are solved independently.
MrfResult unwrap_mrf(const SensorImage& sensor, const MrfConfig& config);

// Energy of a labeling under the model above (exposed for testing).
double mrf_energy(const SensorImage& sensor, const WindingMap& winding,
                  const MrfConfig& config);

}  // namespace wrapcam
