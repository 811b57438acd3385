#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrapcam/edges.hpp"
#include "wrapcam/image.hpp"

namespace wrapcam {

struct Png16 {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 (gray) or 3 (rgb)
  std::vector<std::uint16_t> data;
};

void write_png16(const std::string& path, const Png16& img);
Png16 read_png16(const std::string& path);

// Sensor samples map to codes round(value * 65535 / i_max); reading back
// uses the params (normally recovered from the sidecar metadata).
void write_sensor_png(const SensorImage& sensor, const std::string& path);
SensorImage read_sensor_png(const std::string& path, const CodecParams& params);

// Winding values are stored raw; values outside [0, 65535] are rejected.
void write_winding_png(const WindingMap& winding, const std::string& path);
WindingMap read_winding_png(const std::string& path);

// Edge masks serialize as 8-bit gray PNGs with code = sign + 1.
void write_edges_png(const WrapEdgeMask& edges, const std::string& h_path,
                     const std::string& v_path);

}  // namespace wrapcam
