#include "image_io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "error.hpp"
#include "png_io.hpp"
#include "ppm.hpp"

namespace stegc {

DecodedImage decode_image(std::span<const std::uint8_t> bytes, ImageFormat format) {
  switch (format) {
    case ImageFormat::ppm:
      return DecodedImage{decode_ppm(bytes), false};
    case ImageFormat::png: {
      PngImage decoded = decode_png(bytes);
      return DecodedImage{std::move(decoded.image), decoded.alpha_stripped};
    }
  }
  fail(Status::unsupported_format, "unknown image format");
}

std::vector<std::uint8_t> encode_image(const RgbImage& image, ImageFormat format) {
  switch (format) {
    case ImageFormat::ppm:
      return encode_ppm(image);
    case ImageFormat::png:
      return encode_png(image);
  }
  fail(Status::unsupported_format, "unknown image format");
}

ImageFormat detect_format(std::span<const std::uint8_t> bytes) {
  static constexpr std::uint8_t png_sig[8] = {137, 'P', 'N', 'G', '\r', '\n', 26, '\n'};
  if (bytes.size() >= 8 && std::equal(png_sig, png_sig + 8, bytes.begin())) {
    return ImageFormat::png;
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
    return ImageFormat::ppm;
  }
  if (bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 && bytes[2] == 0xff) {
    fail(Status::unsupported_format, "jpeg is not supported; use a lossless format (ppm, png)");
  }
  fail(Status::unsupported_format, "unrecognized image format (expected PPM P6 or PNG)");
}

DecodedImage load_image_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(Status::io_error, "cannot open " + path);
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    fail(Status::io_error, "read error on " + path);
  }
  if (bytes.empty()) {
    fail(Status::malformed_header, path + " is empty");
  }
  return decode_image(bytes, detect_format(bytes));
}

void save_image_file(const RgbImage& image, const std::string& path, ImageFormat format) {
  const std::vector<std::uint8_t> bytes = encode_image(image, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    fail(Status::io_error, "cannot open " + path + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    fail(Status::io_error, "write error on " + path);
  }
}

}  // namespace stegc
