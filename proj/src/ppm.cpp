#include "ppm.hpp"

#include <string>

#include "error.hpp"

namespace stegc {

namespace {

bool is_ppm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderReader {
public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments (which run to end of line).
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const std::uint8_t c = bytes_[pos_];
      if (is_ppm_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_number(const char* what) {
    skip_separators();
    if (pos_ >= bytes_.size() || bytes_[pos_] < '0' || bytes_[pos_] > '9') {
      fail(Status::malformed_header, std::string("ppm: expected ") + what);
    }
    std::uint64_t value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (++digits > 9) {
        fail(Status::malformed_header, std::string("ppm: ") + what + " is out of range");
      }
      ++pos_;
    }
    return value;
  }

  // The pixel data starts after exactly one whitespace byte following maxval.
  void consume_single_space() {
    if (pos_ >= bytes_.size() || !is_ppm_space(bytes_[pos_])) {
      fail(Status::malformed_header, "ppm: expected single whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RgbImage decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2) {
    fail(Status::malformed_header, "ppm: missing P6 magic");
  }
  if (bytes[0] != 'P' || bytes[1] != '6') {
    fail(Status::malformed_header, "ppm: not a P6 file");
  }
  if (bytes.size() < 3 || (!is_ppm_space(bytes[2]) && bytes[2] != '#')) {
    fail(Status::malformed_header, "ppm: malformed magic");
  }

  HeaderReader header(bytes.subspan(2));
  const std::uint64_t width = header.read_number("width");
  const std::uint64_t height = header.read_number("height");
  const std::uint64_t maxval = header.read_number("maxval");
  header.consume_single_space();

  if (width == 0 || height == 0) {
    fail(Status::malformed_header, "ppm: zero image dimension");
  }
  if (width * height > RgbImage::kMaxPixels) {
    fail(Status::malformed_header, "ppm: image dimensions too large");
  }
  if (maxval == 0 || maxval > 65535) {
    fail(Status::malformed_header, "ppm: maxval " + std::to_string(maxval) + " is invalid");
  }
  if (maxval != 255) {
    fail(Status::unsupported_depth,
         "ppm: maxval " + std::to_string(maxval) + " not supported (8-bit requires 255)");
  }

  const std::size_t body_start = 2 + header.pos();
  const std::uint64_t need = width * height * 3;
  if (bytes.size() - body_start < need) {
    fail(Status::truncated_data,
         "ppm: expected " + std::to_string(need) + " pixel bytes, found " +
             std::to_string(bytes.size() - body_start));
  }

  RgbImage image(static_cast<std::uint32_t>(width), static_cast<std::uint32_t>(height));
  const std::uint8_t* p = bytes.data() + body_start;
  for (Pixel& px : image.pixels()) {
    px.red = p[0];
    px.green = p[1];
    px.blue = p[2];
    p += 3;
  }
  return image;
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& image) {
  const std::string header = "P6\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + image.pixel_count() * 3);
  out.insert(out.end(), header.begin(), header.end());
  for (const Pixel& px : image.pixels()) {
    out.push_back(px.red);
    out.push_back(px.green);
    out.push_back(px.blue);
  }
  return out;
}

}  // namespace stegc
