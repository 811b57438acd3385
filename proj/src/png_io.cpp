#include "wrapcam/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace wrapcam {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

void write_png_impl(const std::string& path, int width, int height,
                    int channels, int bit_depth, const void* rows_base,
                    std::size_t row_stride_bytes) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) fail(path, "cannot open file for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, nullptr);
  if (!png) fail(path, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "libpng write error");
  }

  png_init_io(png, file.get());
  const int color_type = channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY;
  png_set_IHDR(png, info, width, height, bit_depth, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);  // buffers are host little-endian

  std::vector<png_bytep> rows(height);
  auto* base = const_cast<png_bytep>(static_cast<const png_byte*>(rows_base));
  for (int y = 0; y < height; ++y) rows[y] = base + y * row_stride_bytes;
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

struct PngReadState {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadState() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

}  // namespace

void write_png16(const std::string& path, const Png16& img) {
  if (img.channels != 1 && img.channels != 3)
    throw std::invalid_argument("write_png16: channels must be 1 or 3");
  const std::size_t stride =
      static_cast<std::size_t>(img.width) * img.channels * 2;
  write_png_impl(path, img.width, img.height, img.channels, 16,
                 img.data.data(), stride);
}

Png16 read_png16(const std::string& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) fail(path, "cannot open file");

  PngReadState st;
  st.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!st.png) fail(path, "png_create_read_struct failed");
  st.info = png_create_info_struct(st.png);
  if (!st.info) fail(path, "png_create_info_struct failed");
  if (setjmp(png_jmpbuf(st.png))) fail(path, "libpng read error");

  png_init_io(st.png, file.get());
  png_read_info(st.png, st.info);

  Png16 out;
  out.width = static_cast<int>(png_get_image_width(st.png, st.info));
  out.height = static_cast<int>(png_get_image_height(st.png, st.info));
  const int color_type = png_get_color_type(st.png, st.info);
  const int bit_depth = png_get_bit_depth(st.png, st.info);
  if (bit_depth != 16) fail(path, "expected a 16-bit PNG");
  if (color_type == PNG_COLOR_TYPE_GRAY)
    out.channels = 1;
  else if (color_type == PNG_COLOR_TYPE_RGB)
    out.channels = 3;
  else
    fail(path, "expected a gray or RGB PNG");

  png_set_swap(st.png);
  out.data.resize(static_cast<std::size_t>(out.width) * out.height * out.channels);
  std::vector<png_bytep> rows(out.height);
  const std::size_t stride = static_cast<std::size_t>(out.width) * out.channels * 2;
  for (int y = 0; y < out.height; ++y)
    rows[y] = reinterpret_cast<png_bytep>(out.data.data()) + y * stride;
  png_read_image(st.png, rows.data());
  png_read_end(st.png, nullptr);
  return out;
}

void write_sensor_png(const SensorImage& sensor, const std::string& path) {
  Png16 img;
  img.width = sensor.width;
  img.height = sensor.height;
  img.channels = sensor.channels;
  img.data.resize(sensor.data.size());
  const double scale = 65535.0 / sensor.params.i_max;
  for (std::size_t i = 0; i < sensor.data.size(); ++i) {
    const double code = std::round(sensor.data[i] * scale);
    img.data[i] = static_cast<std::uint16_t>(
        std::min(std::max(code, 0.0), 65535.0));
  }
  write_png16(path, img);
}

SensorImage read_sensor_png(const std::string& path, const CodecParams& params) {
  params.validate();
  const Png16 img = read_png16(path);
  SensorImage sensor(img.width, img.height, img.channels, params);
  const double scale = params.i_max / 65535.0;
  for (std::size_t i = 0; i < img.data.size(); ++i)
    sensor.data[i] = img.data[i] * scale;
  return sensor;
}

void write_winding_png(const WindingMap& winding, const std::string& path) {
  Png16 img;
  img.width = winding.width;
  img.height = winding.height;
  img.channels = winding.channels;
  img.data.resize(winding.data.size());
  for (std::size_t i = 0; i < winding.data.size(); ++i) {
    const std::int32_t v = winding.data[i];
    if (v < 0 || v > 65535)
      throw std::invalid_argument("write_winding_png: winding value " +
                                  std::to_string(v) + " overflows 16 bits");
    img.data[i] = static_cast<std::uint16_t>(v);
  }
  write_png16(path, img);
}

WindingMap read_winding_png(const std::string& path) {
  const Png16 img = read_png16(path);
  WindingMap winding(img.width, img.height, img.channels);
  for (std::size_t i = 0; i < img.data.size(); ++i)
    winding.data[i] = img.data[i];
  return winding;
}

void write_edges_png(const WrapEdgeMask& edges, const std::string& h_path,
                     const std::string& v_path) {
  auto write_plane = [](const std::vector<std::int8_t>& plane, int w, int h,
                        int c, const std::string& path) {
    if (w < 1 || h < 1) return;  // 1-pixel-wide images have no such boundaries
    std::vector<std::uint8_t> bytes(plane.size());
    for (std::size_t i = 0; i < plane.size(); ++i)
      bytes[i] = static_cast<std::uint8_t>(plane[i] + 1);
    write_png_impl(path, w, h, c, 8, bytes.data(),
                   static_cast<std::size_t>(w) * c);
  };
  write_plane(edges.horizontal, edges.width - 1, edges.height, edges.channels,
              h_path);
  write_plane(edges.vertical, edges.width, edges.height - 1, edges.channels,
              v_path);
}

}  // namespace wrapcam
