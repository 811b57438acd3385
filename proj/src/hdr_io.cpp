#include "wrapcam/hdr_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wrapcam {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::uint32_t byteswap32(std::uint32_t v) {
  return ((v & 0x000000ffu) << 24) | ((v & 0x0000ff00u) << 8) |
         ((v & 0x00ff0000u) >> 8) | ((v & 0xff000000u) >> 24);
}

float float_from_bytes(const unsigned char* p, bool little) {
  std::uint32_t bits;
  std::memcpy(&bits, p, 4);
  if ((std::endian::native == std::endian::little) != little)
    bits = byteswap32(bits);
  float f;
  std::memcpy(&f, &bits, 4);
  return f;
}

}  // namespace

HdrReadResult read_hdr(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(path, "cannot open file");
  char magic[2] = {0, 0};
  file.read(magic, 2);
  if (!file) fail(path, "malformed header: file too short");
  file.close();
  if (magic[0] == 'P' && (magic[1] == 'F' || magic[1] == 'f'))
    return read_pfm(path);
  if (magic[0] == '#' && magic[1] == '?') return read_rgbe(path);
  fail(path, "unsupported format: expected PFM (PF/Pf) or Radiance (#?)");
}

HdrReadResult read_pfm(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(path, "cannot open file");

  std::string magic;
  int width = 0, height = 0;
  double scale = 0.0;
  file >> magic >> width >> height >> scale;
  if (!file) fail(path, "malformed header: expected magic, dims, scale");
  if (magic != "PF" && magic != "Pf")
    fail(path, "unsupported variant: magic '" + magic + "'");
  if (width < 1 || height < 1) fail(path, "malformed header: bad dimensions");
  if (scale == 0.0) fail(path, "malformed header: zero scale");
  file.get();  // single whitespace byte before the payload

  const int channels = magic == "PF" ? 3 : 1;
  const bool little = scale < 0.0;
  const std::size_t row_bytes = static_cast<std::size_t>(width) * channels * 4;

  HdrReadResult result;
  result.format = "pfm";
  result.image = IrradianceImage(width, height, channels);

  std::vector<unsigned char> row(row_bytes);
  // PFM scanlines run bottom to top.
  for (int y = height - 1; y >= 0; --y) {
    file.read(reinterpret_cast<char*>(row.data()), row_bytes);
    if (!file) fail(path, "truncated payload");
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        double v = float_from_bytes(row.data() + (x * channels + c) * 4, little);
        if (!std::isfinite(v)) fail(path, "non-finite sample in payload");
        if (v < 0.0) {
          v = 0.0;
          ++result.negatives_clamped;
        }
        result.image.at(x, y, c) = v;
      }
    }
  }
  return result;
}

void write_pfm(const IrradianceImage& img, const std::string& path) {
  img.validate();
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(path, "cannot open file for writing");

  const bool little = std::endian::native == std::endian::little;
  file << (img.channels == 3 ? "PF" : "Pf") << "\n"
       << img.width << " " << img.height << "\n"
       << (little ? "-1.0" : "1.0") << "\n";

  std::vector<float> row(static_cast<std::size_t>(img.width) * img.channels);
  for (int y = img.height - 1; y >= 0; --y) {
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < img.channels; ++c)
        row[static_cast<std::size_t>(x) * img.channels + c] =
            static_cast<float>(img.at(x, y, c));
    file.write(reinterpret_cast<const char*>(row.data()),
               static_cast<std::streamsize>(row.size() * 4));
  }
  if (!file) fail(path, "write failed");
}

namespace {

// Decodes one RGBE quad: value = mantissa/256 * 2^(e-128).
void rgbe_to_linear(const unsigned char q[4], double out[3]) {
  if (q[3] == 0) {
    out[0] = out[1] = out[2] = 0.0;
    return;
  }
  const double f = std::ldexp(1.0, static_cast<int>(q[3]) - 136);
  out[0] = q[0] * f;
  out[1] = q[1] * f;
  out[2] = q[2] * f;
}

}  // namespace

HdrReadResult read_rgbe(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(path, "cannot open file");

  std::string line;
  if (!std::getline(file, line) || line.rfind("#?", 0) != 0)
    fail(path, "malformed header: missing #? signature");

  bool format_ok = false;
  while (std::getline(file, line)) {
    if (line.empty()) break;  // blank line ends the header
    if (line[0] == '#') continue;
    if (line.rfind("FORMAT=", 0) == 0) {
      if (line == "FORMAT=32-bit_rle_rgbe")
        format_ok = true;
      else
        fail(path, "unsupported variant: " + line);
    }
    // EXPOSURE, GAMMA, and other header variables are ignored.
  }
  if (!format_ok) fail(path, "malformed header: missing FORMAT=32-bit_rle_rgbe");

  int width = 0, height = 0;
  if (!std::getline(file, line)) fail(path, "malformed header: missing resolution");
  {
    std::istringstream res(line);
    std::string ydir, xdir;
    res >> ydir >> height >> xdir >> width;
    if (!res || ydir != "-Y" || xdir != "+X")
      fail(path, "unsupported variant: resolution '" + line + "'");
  }
  if (width < 1 || height < 1) fail(path, "malformed header: bad dimensions");

  HdrReadResult result;
  result.format = "rgbe";
  result.image = IrradianceImage(width, height, 3);

  std::vector<unsigned char> scan(static_cast<std::size_t>(width) * 4);
  auto read_byte = [&]() -> int {
    const int b = file.get();
    if (b == EOF) fail(path, "truncated payload");
    return b;
  };

  for (int y = 0; y < height; ++y) {
    unsigned char head[4];
    file.read(reinterpret_cast<char*>(head), 4);
    if (!file) fail(path, "truncated payload");

    if (head[0] == 2 && head[1] == 2 && ((head[2] << 8) | head[3]) == width &&
        width >= 8 && width <= 0x7fff) {
      // New-style RLE: four component planes, run/literal coded.
      for (int comp = 0; comp < 4; ++comp) {
        int x = 0;
        while (x < width) {
          const int code = read_byte();
          if (code > 128) {
            const int count = code - 128;
            if (x + count > width) fail(path, "malformed RLE run");
            const int value = read_byte();
            for (int i = 0; i < count; ++i) scan[(x + i) * 4 + comp] =
                static_cast<unsigned char>(value);
            x += count;
          } else {
            if (code == 0 || x + code > width) fail(path, "malformed RLE run");
            for (int i = 0; i < code; ++i)
              scan[(x + i) * 4 + comp] = static_cast<unsigned char>(read_byte());
            x += code;
          }
        }
      }
    } else {
      // Flat or old-style run-length scanline.
      int x = 0;
      int shift = 0;
      unsigned char q[4] = {head[0], head[1], head[2], head[3]};
      while (true) {
        if (q[0] == 1 && q[1] == 1 && q[2] == 1) {
          if (x == 0) fail(path, "malformed old-style run at scanline start");
          const int count = q[3] << shift;
          if (x + count > width) fail(path, "malformed old-style run");
          for (int i = 0; i < count; ++i)
            std::memcpy(&scan[(x + i) * 4], &scan[(x - 1) * 4], 4);
          x += count;
          shift += 8;
        } else {
          std::memcpy(&scan[x * 4], q, 4);
          ++x;
          shift = 0;
        }
        if (x >= width) break;
        file.read(reinterpret_cast<char*>(q), 4);
        if (!file) fail(path, "truncated payload");
      }
    }

    for (int x = 0; x < width; ++x) {
      double rgb[3];
      rgbe_to_linear(&scan[x * 4], rgb);
      for (int c = 0; c < 3; ++c) result.image.at(x, y, c) = rgb[c];
    }
  }
  return result;
}

}  // namespace wrapcam
