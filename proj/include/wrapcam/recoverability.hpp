#pragma once

#include <span>
#include <vector>

#include "wrapcam/image.hpp"

namespace wrapcam {

struct PairViolation {
  int x0, y0;
  int x1, y1;
  int channel;
  double delta;  // |in-domain difference| across the pair
  double bound;  // i_max
};

struct RecoverabilityReport {
  long total_pairs = 0;  // horizontal + vertical 4-neighbor pairs, per channel
  std::vector<PairViolation> violations;
  bool satisfied = true;
};

// Pairwise single-wrap recoverability check over the 4-neighborhood.
// Modulo flags |I[q] - I[p]| > i_max; mantissa flags the same bound on
// log_alpha differences, with samples below i_max clamped to i_max so
// the identity branch never produces spurious log violations.
RecoverabilityReport check_recoverable(const IrradianceImage& img,
                                       const CodecParams& params);

struct Unwrap1dResult {
  std::vector<double> unwrapped;  // in-domain values anchored at wrapped[0]
  std::vector<int> counts;        // accumulated wrap counts, counts[0] = 0
  long ties = 0;                  // steps of exactly i_max/2; k = 0 was used
};

// Greedy nearest-continuation unwrapping of one wrapped sequence. At each
// step picks k in {-1, 0, +1} minimizing |d + k*i_max| for the wrapped
// difference d and accumulates the winding. Exact whenever all in-domain
// steps have magnitude < i_max/2.
Unwrap1dResult unwrap_sequential_1d(std::span<const double> wrapped,
                                    const CodecParams& params);

// Maps an unwrap result back to irradiance. first_winding anchors the
// absolute wrap count of sample 0 (0 when the signal starts below i_max).
std::vector<double> irradiance_from_unwrapped(std::span<const double> wrapped,
                                              const Unwrap1dResult& result,
                                              const CodecParams& params,
                                              int first_winding = 0);

struct DynamicRangeEstimate {
  long n_pixels = 0;
  double i_max = 0.0;
  double dr_db = 0.0;
  Encoding kind = Encoding::Modulo;
};

// Maximum recoverable dynamic range of an N-pixel ramp:
// modulo 10*log10(N*i_max) dB, mantissa 10*N*log10(i_max) dB. The mantissa
// formula degenerates at i_max <= 1 and is rejected there.
DynamicRangeEstimate max_dynamic_range(Encoding kind, long n_pixels, double i_max);

}  // namespace wrapcam
