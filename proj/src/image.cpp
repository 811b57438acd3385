#include "wrapcam/image.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wrapcam {

std::string to_string(Encoding kind) {
  return kind == Encoding::Modulo ? "modulo" : "mantissa";
}

Encoding encoding_from_string(const std::string& name) {
  if (name == "modulo") return Encoding::Modulo;
  if (name == "mantissa") return Encoding::Mantissa;
  throw std::invalid_argument("unknown encoding '" + name +
                              "' (expected 'modulo' or 'mantissa')");
}

void CodecParams::validate() const {
  if (!(i_max > 0.0) || !std::isfinite(i_max))
    throw std::invalid_argument("codec params: i_max must be finite and > 0");
  if (kind == Encoding::Mantissa) {
    if (!(alpha > 1.0) || !std::isfinite(alpha))
      throw std::invalid_argument("codec params: mantissa requires alpha > 1");
    if (i_max < 1.0)
      throw std::invalid_argument(
          "codec params: mantissa requires i_max >= 1 (smaller periods give "
          "negative wrap counts on the log branch)");
  }
  if (bits < 0 || bits > 16)
    throw std::invalid_argument("codec params: bits must be 0 (disabled) or 1..16");
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma))
    throw std::invalid_argument("codec params: noise_sigma must be finite and >= 0");
}

void IrradianceImage::validate() const {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image: width and height must be >= 1");
  if (channels != 1 && channels != 3)
    throw std::invalid_argument("image: channels must be 1 or 3");
  const std::size_t expected =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height) * channels;
  if (data.size() != expected)
    throw std::invalid_argument("image: data length does not match width*height*channels");
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        const double v = at(x, y, c);
        if (!std::isfinite(v) || v < 0.0) {
          std::ostringstream msg;
          msg << "image: sample at (x=" << x << ", y=" << y << ", c=" << c
              << ") is " << (std::isfinite(v) ? "negative" : "non-finite");
          throw std::invalid_argument(msg.str());
        }
      }
    }
  }
}

std::int32_t WindingMap::max_value() const {
  std::int32_t m = 0;
  for (std::int32_t v : data) m = std::max(m, v);
  return m;
}

}  // namespace wrapcam
