#include "png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <string>

#include "error.hpp"

namespace stegc {

namespace {

struct MemoryReader {
  const std::uint8_t* data;
  std::size_t size;
  std::size_t pos;
  // volatile: read back after libpng's longjmp unwinds the decode.
  volatile bool* overrun;
};

extern "C" void read_callback(png_structp png, png_bytep out, png_size_t count) {
  auto* reader = static_cast<MemoryReader*>(png_get_io_ptr(png));
  if (reader->pos + count > reader->size) {
    *reader->overrun = true;
    png_error(png, "unexpected end of data");
  }
  std::memcpy(out, reader->data + reader->pos, count);
  reader->pos += count;
}

extern "C" void write_callback(png_structp png, png_bytep data, png_size_t count) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  try {
    out->insert(out->end(), data, data + count);
  } catch (...) {
    png_error(png, "out of memory");
  }
}

extern "C" void flush_callback(png_structp) {}

// Swallow libpng warnings; decode results are checked explicitly.
extern "C" void warning_callback(png_structp, png_const_charp) {}

}  // namespace

PngImage decode_png(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
    fail(Status::malformed_header, "png: missing PNG signature");
  }

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                           warning_callback);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(Status::io_error, "png: failed to allocate decoder state");
  }

  volatile bool overrun = false;
  MemoryReader reader{bytes.data(), bytes.size(), 0, &overrun};
  png_set_read_fn(png, &reader, read_callback);

  // All non-trivially-destructible locals are declared before the setjmp
  // target; code past it only mutates them.
  std::vector<std::uint8_t> raw;
  std::vector<png_bytep> rows;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  int bit_depth = 0;
  int color_type = 0;
  volatile bool alpha_stripped = false;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    if (overrun) {
      fail(Status::truncated_data, "png: truncated pixel data");
    }
    fail(Status::malformed_header, "png: corrupt stream");
  }

  png_read_info(png, info);
  width = png_get_image_width(png, info);
  height = png_get_image_height(png, info);
  bit_depth = png_get_bit_depth(png, info);
  color_type = png_get_color_type(png, info);

  if (color_type != PNG_COLOR_TYPE_RGB && color_type != PNG_COLOR_TYPE_RGB_ALPHA) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(Status::unsupported_color_type,
         "png: color type " + std::to_string(color_type) +
             " not supported (truecolor required)");
  }
  if (bit_depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(Status::unsupported_depth,
         "png: bit depth " + std::to_string(bit_depth) + " not supported (8 required)");
  }
  if (width == 0 || height == 0 || std::uint64_t{width} * height > RgbImage::kMaxPixels) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(Status::malformed_header, "png: unsupported image dimensions");
  }

  if (color_type == PNG_COLOR_TYPE_RGB_ALPHA) {
    png_set_strip_alpha(png);
    alpha_stripped = true;
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  raw.resize(std::size_t{width} * height * 3);
  rows.resize(height);
  for (std::uint32_t y = 0; y < height; ++y) {
    rows[y] = raw.data() + std::size_t{y} * width * 3;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  RgbImage image(width, height);
  const std::uint8_t* p = raw.data();
  for (Pixel& px : image.pixels()) {
    px.red = p[0];
    px.green = p[1];
    px.blue = p[2];
    p += 3;
  }
  return PngImage{std::move(image), alpha_stripped};
}

std::vector<std::uint8_t> encode_png(const RgbImage& image) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                            warning_callback);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    fail(Status::io_error, "png: failed to allocate encoder state");
  }

  std::vector<std::uint8_t> out;
  std::vector<std::uint8_t> raw(image.pixel_count() * 3);
  std::vector<png_bytep> rows(image.height());

  std::uint8_t* p = raw.data();
  for (const Pixel& px : image.pixels()) {
    p[0] = px.red;
    p[1] = px.green;
    p[2] = px.blue;
    p += 3;
  }
  for (std::uint32_t y = 0; y < image.height(); ++y) {
    rows[y] = raw.data() + std::size_t{y} * image.width() * 3;
  }

  png_set_write_fn(png, &out, write_callback, flush_callback);

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(Status::io_error, "png: encoding failed");
  }

  png_set_IHDR(png, info, image.width(), image.height(), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows.data());
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
  return out;
}

}  // namespace stegc
