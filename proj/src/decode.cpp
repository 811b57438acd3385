#include "wrapcam/decode.hpp"

#include "wrapcam/codec.hpp"
#include "wrapcam/edges.hpp"

namespace wrapcam {

DecodeResult decode(const SensorImage& sensor, const DecodeOptions& options) {
  DecodeResult result;
  if (options.solver == SolverKind::FloodFill) {
    const WrapEdgeMask edges = detect_wrap_edges(sensor, options.tau);
    FloodFillResult ff = unwrap_floodfill(sensor, edges);
    result.conflicts = ff.conflicts;
    result.negative_clamps = ff.negative_clamps;
    result.winding = std::move(ff.winding);
  } else {
    MrfResult mrf = unwrap_mrf(sensor, options.mrf);
    result.winding = mrf.winding;
    result.mrf = std::move(mrf);
  }
  result.image = reconstruct(sensor, result.winding);
  return result;
}

}  // namespace wrapcam
