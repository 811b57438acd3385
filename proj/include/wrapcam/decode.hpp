#pragma once

#include <optional>

#include "wrapcam/floodfill.hpp"
#include "wrapcam/image.hpp"
#include "wrapcam/mrf.hpp"

namespace wrapcam {

enum class SolverKind { FloodFill, Mrf };

struct DecodeOptions {
  SolverKind solver = SolverKind::FloodFill;
  double tau = -1.0;  // edge detection threshold; <= 0 selects i_max/2
  MrfConfig mrf;
};

struct DecodeResult {
  IrradianceImage image;
  WindingMap winding;
  long conflicts = 0;       // flood-fill label conflicts
  long negative_clamps = 0;
  std::optional<MrfResult> mrf;  // present for the MRF solver
};

// Full single-image decoder: winding recovery by the chosen solver
// followed by reconstruction.
DecodeResult decode(const SensorImage& sensor, const DecodeOptions& options = {});

}  // namespace wrapcam
