#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wrapcam {

enum class Encoding { Modulo, Mantissa };

std::string to_string(Encoding kind);
Encoding encoding_from_string(const std::string& name);

// Parameters of the in-pixel wrapping codec: wrapping kind, log base,
// wrap period, quantizer depth, additive read-noise level, RNG seed.
struct CodecParams {
  Encoding kind = Encoding::Modulo;
  double alpha = 2.0;        // log base (mantissa only), must be > 1
  double i_max = 1.0;        // wrap period in sensor units, > 0
  int bits = 0;              // quantizer depth; 0 disables, else 1..16
  double noise_sigma = 0.0;  // stddev of additive Gaussian noise, >= 0
  std::uint64_t seed = 0;

  // Throws std::invalid_argument on violations. Mantissa additionally
  // requires i_max >= 1: with a smaller period the log branch would
  // produce negative wrap counts.
  void validate() const;
};

// Linear, nonnegative radiance map. Samples are row-major and
// channel-interleaved; channels is 1 or 3.
struct IrradianceImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> data;

  IrradianceImage() = default;
  IrradianceImage(int w, int h, int c)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * c, 0.0) {}

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  double& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
  double at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
  std::size_t sample_count() const { return data.size(); }

  // Shape consistency plus per-sample finiteness and nonnegativity.
  // The diagnostic names the first offending pixel.
  void validate() const;
};

// Wrapped, possibly quantized and noisy LDR observation. Every sample
// lies in [0, i_max). Carries the params that produced it so decoding
// stays self-contained.
struct SensorImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<double> data;
  CodecParams params;

  SensorImage() = default;
  SensorImage(int w, int h, int c, CodecParams p)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * c, 0.0),
        params(p) {}

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  double& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
  double at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
  std::size_t sample_count() const { return data.size(); }
};

// Integer per-pixel wrap counts, all entries >= 0 for encoder output.
struct WindingMap {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::int32_t> data;

  WindingMap() = default;
  WindingMap(int w, int h, int c)
      : width(w), height(h), channels(c),
        data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * c, 0) {}

  std::size_t index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  std::int32_t& at(int x, int y, int c = 0) { return data[index(x, y, c)]; }
  std::int32_t at(int x, int y, int c = 0) const { return data[index(x, y, c)]; }
  std::size_t sample_count() const { return data.size(); }

  std::int32_t max_value() const;
};

template <typename A, typename B>
bool same_shape(const A& a, const B& b) {
  return a.width == b.width && a.height == b.height && a.channels == b.channels;
}

}  // namespace wrapcam
