#pragma once

#include <string>

#include "wrapcam/image.hpp"

namespace wrapcam {

struct HdrReadResult {
  IrradianceImage image;
  long negatives_clamped = 0;  // negative file samples clamped to 0
  std::string format;          // "pfm" or "rgbe"
};

// Reads a Portable Float Map (PF/Pf) or Radiance RGBE (.hdr) file,
// dispatching on the magic bytes. Output is linear and nonnegative.
HdrReadResult read_hdr(const std::string& path);

HdrReadResult read_pfm(const std::string& path);
HdrReadResult read_rgbe(const std::string& path);

// Writes a PFM ("Pf" for 1 channel, "PF" for 3) with host endianness
// signalled through the scale sign. Samples are narrowed to 32-bit
// floats; float-valued images round-trip bit-exactly.
void write_pfm(const IrradianceImage& img, const std::string& path);

}  // namespace wrapcam
