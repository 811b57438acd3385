#include "wrapcam/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wrapcam {

namespace {

double log_base(double v, double alpha) {
  return alpha == 2.0 ? std::log2(v) : std::log(v) / std::log(alpha);
}

double exp_base(double v, double alpha) {
  return alpha == 2.0 ? std::exp2(v) : std::pow(alpha, v);
}

struct WrappedSample {
  double m;
  std::int32_t w;
};

WrappedSample wrap_sample(double v, const CodecParams& p) {
  if (p.kind == Encoding::Modulo) {
    double k = std::floor(v / p.i_max);
    double m = v - k * p.i_max;
    // Guard against floor/multiply rounding at window boundaries.
    if (m < 0.0) { m += p.i_max; k -= 1.0; }
    if (m >= p.i_max) { m -= p.i_max; k += 1.0; }
    m = std::max(m, 0.0);
    return {m, static_cast<std::int32_t>(k)};
  }
  if (v < p.i_max) return {v, 0};
  const double l = log_base(v, p.alpha);
  double k = std::floor(l / p.i_max);
  double m = l - k * p.i_max;
  if (m < 0.0) { m += p.i_max; k -= 1.0; }
  if (m >= p.i_max) { m -= p.i_max; k += 1.0; }
  m = std::max(m, 0.0);
  return {m, static_cast<std::int32_t>(k) + 1};
}

}  // namespace

EncodeResult encode(const IrradianceImage& img, const CodecParams& params) {
  img.validate();
  params.validate();

  EncodeResult out;
  out.sensor = SensorImage(img.width, img.height, img.channels, params);
  out.winding = WindingMap(img.width, img.height, img.channels);

  const double i_max = params.i_max;
  const int levels = params.bits > 0 ? (1 << params.bits) - 1 : 0;
  const double step = params.bits > 0 ? i_max / levels : 0.0;
  const double top = std::nextafter(i_max, 0.0);

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> noise(0.0, params.noise_sigma);

  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const double v = img.data[i];
    if (!std::isfinite(v) || v < 0.0) {
      // validate() already rejects these; keep a cheap second line of
      // defense for images mutated after validation.
      const std::size_t pixel = i / img.channels;
      std::ostringstream msg;
      msg << "encode: sample at (x=" << pixel % img.width
          << ", y=" << pixel / img.width << ", c=" << i % img.channels
          << ") is invalid";
      throw std::invalid_argument(msg.str());
    }

    WrappedSample s = wrap_sample(v, params);
    out.winding.data[i] = s.w;

    double m = s.m;
    if (params.bits > 0) {
      m = std::round(m / step) * step;
      // The quantizer's top code equals i_max, which collides with the
      // wrap point; keep the sensor range half-open.
      if (m >= i_max) m = i_max - step;
    }
    if (params.noise_sigma > 0.0) {
      m = std::clamp(m + noise(rng), 0.0, top);
    }
    out.sensor.data[i] = m;
  }
  return out;
}

IrradianceImage reconstruct(const SensorImage& sensor, const WindingMap& winding) {
  if (!same_shape(sensor, winding))
    throw std::invalid_argument("reconstruct: sensor/winding dimension mismatch");
  IrradianceImage out(sensor.width, sensor.height, sensor.channels);
  for (std::size_t i = 0; i < sensor.data.size(); ++i) {
    const std::int32_t w = winding.data[i];
    if (w < 0)
      throw std::invalid_argument("reconstruct: negative winding entry");
    out.data[i] = reconstruct_value(sensor.data[i], w, sensor.params);
  }
  return out;
}

double reconstruct_value(double m, std::int32_t w, const CodecParams& params) {
  if (params.kind == Encoding::Modulo)
    return m + static_cast<double>(w) * params.i_max;
  if (w == 0) return m;
  return exp_base(m + static_cast<double>(w - 1) * params.i_max, params.alpha);
}

double quantize(double value, double i_max, int bits) {
  if (!(i_max > 0.0))
    throw std::invalid_argument("quantize: i_max must be > 0");
  if (bits < 1 || bits > 16)
    throw std::invalid_argument("quantize: bits must be in 1..16");
  if (!(value >= 0.0) || !(value <= i_max))
    throw std::invalid_argument("quantize: value outside [0, i_max]");
  const double levels = static_cast<double>((1 << bits) - 1);
  return std::round(value * levels / i_max) * (i_max / levels);
}

QuantErrorBounds quantization_error_bounds(const CodecParams& params,
                                           std::int32_t winding) {
  params.validate();
  if (params.bits < 1)
    throw std::invalid_argument(
        "quantization_error_bounds: quantizer disabled (bits = 0)");
  if (winding < 0)
    throw std::invalid_argument("quantization_error_bounds: winding must be >= 0");

  const double step = params.i_max / ((1 << params.bits) - 1);
  const double inf = std::numeric_limits<double>::infinity();

  if (params.kind == Encoding::Modulo) {
    const double rel = winding == 0 ? inf : step / (winding * params.i_max);
    return {step, rel};
  }
  // Mantissa: step is uniform in the log domain; the relative error it
  // induces is alpha^step - 1 regardless of winding, while the absolute
  // step scales with the reconstructed value.
  const double rel_const = std::expm1(step * std::log(params.alpha));
  if (winding == 0) return {step, inf};
  const double mid = std::exp((0.5 + (winding - 1)) * params.i_max *
                              std::log(params.alpha));
  return {mid * rel_const, rel_const};
}

}  // namespace wrapcam
