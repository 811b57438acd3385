#pragma once

#include <cstdint>

#include "wrapcam/image.hpp"

namespace wrapcam {

struct EncodeResult {
  SensorImage sensor;
  WindingMap winding;  // ground truth from the noiseless, unquantized signal
};

// Forward model: wrap each sample, then quantize (bits > 0), then add
// clamped Gaussian read noise (noise_sigma > 0). Output samples lie in
// [0, i_max). Modulo stores I mod i_max with W = floor(I / i_max).
// Mantissa stores the sample unchanged below i_max (W = 0); at or above
// it stores log_alpha(I) mod i_max with W = floor(log_alpha(I)/i_max) + 1.
EncodeResult encode(const IrradianceImage& img, const CodecParams& params);

// Inverse of the noiseless forward model given per-pixel wrap counts.
IrradianceImage reconstruct(const SensorImage& sensor, const WindingMap& winding);

// Scalar inverse used by the solvers: modulo m + w*i_max; mantissa m when
// w == 0, else alpha^(m + (w-1)*i_max).
double reconstruct_value(double m, std::int32_t w, const CodecParams& params);

// In-domain unwrapped coordinate m + w*i_max. For modulo this is the
// irradiance itself; for mantissa it is the joined linear-below/log-above
// axis the smoothness solvers operate on.
inline double domain_value(double m, std::int32_t w, const CodecParams& params) {
  return m + static_cast<double>(w) * params.i_max;
}

// Uniform mid-tread quantizer with 2^bits levels over [0, i_max], top code
// inclusive. Idempotent. Rejects values outside [0, i_max] and bits
// outside 1..16.
double quantize(double value, double i_max, int bits);

struct QuantErrorBounds {
  double absolute_step;       // reconstructed-value step for the given winding
  double max_relative_error;  // worst-case relative error over the window
};

// Closed-form quantization error for a given winding window. Modulo: the
// absolute step i_max/(2^bits - 1) is winding independent and the relative
// bound step/(w*i_max) holds at the window start. Mantissa: the relative
// bound alpha^step - 1 is winding independent and the absolute step is
// reported at the window midpoint. Windows with w == 0 start at zero, so
// their relative bound is infinite.
QuantErrorBounds quantization_error_bounds(const CodecParams& params,
                                           std::int32_t winding);

}  // namespace wrapcam
