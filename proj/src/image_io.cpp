#include "hft/image_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include <png.h>

namespace hft {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void png_fail(const std::string& what, const std::filesystem::path& path) {
  throw InvalidInput("PNG " + what + ": " + path.string());
}

}  // namespace

RealField read_png_gray(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) png_fail("cannot open", path);
  png_byte sig[8];
  if (std::fread(sig, 1, 8, fp.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
    png_fail("bad signature", path);
  }
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    png_fail("out of memory", path);
  }
  RealField out;
  std::vector<png_byte> buffer;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    png_fail("decode error", path);
  }
  png_init_io(png, fp.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);
  const auto width = png_get_image_width(png, info);
  const auto height = png_get_image_height(png, info);
  const int depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);
  if (color != PNG_COLOR_TYPE_GRAY || (depth != 8 && depth != 16)) {
    png_destroy_read_struct(&png, &info, nullptr);
    png_fail("is not 8/16-bit grayscale", path);
  }
  const size_t bytes_per_px = depth == 16 ? 2 : 1;
  buffer.resize(static_cast<size_t>(width) * height * bytes_per_px);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = buffer.data() + y * width * bytes_per_px;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  out.resize(height, width);
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      const png_byte* p = rows[y] + x * bytes_per_px;
      // PNG stores 16-bit samples big-endian.
      out(y, x) = depth == 16 ? static_cast<double>((p[0] << 8) | p[1]) : static_cast<double>(p[0]);
    }
  }
  return out;
}

void write_png16(const std::filesystem::path& path, const RealField& counts) {
  if (counts.size() == 0) throw InvalidInput("write_png16: empty image");
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) png_fail("cannot open for writing", path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    png_fail("out of memory", path);
  }
  const auto width = static_cast<png_uint_32>(counts.cols());
  const auto height = static_cast<png_uint_32>(counts.rows());
  std::vector<png_byte> buffer(static_cast<size_t>(width) * height * 2);
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      double v = counts(y, x);
      v = std::isfinite(v) ? std::min(65535.0, std::max(0.0, std::round(v))) : 0.0;
      const auto u = static_cast<unsigned>(v);
      png_byte* p = buffer.data() + (static_cast<size_t>(y) * width + x) * 2;
      p[0] = static_cast<png_byte>(u >> 8);
      p[1] = static_cast<png_byte>(u & 0xff);
    }
  }
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = buffer.data() + static_cast<size_t>(y) * width * 2;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    png_fail("encode error", path);
  }
  png_init_io(png, fp.get());
  png_set_IHDR(png, info, width, height, 16, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

RealField log_display(const RealField& a) {
  const double peak = a.size() ? a.maxCoeff() : 0.0;
  if (!(peak > 0.0)) return RealField::Zero(a.rows(), a.cols());
  const double scale = 65535.0 / std::log10(1.0 + peak);
  return (1.0 + a.max(0.0)).log10() * scale;
}

RealField linear_display(const RealField& v) {
  const double lo = v.minCoeff();
  const double hi = v.maxCoeff();
  if (!(hi > lo)) return RealField::Zero(v.rows(), v.cols());
  return (v - lo) * (65535.0 / (hi - lo));
}

}  // namespace hft
