#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace stegc {

struct Pixel {
  std::uint8_t red = 0;
  std::uint8_t green = 0;
  std::uint8_t blue = 0;

  bool operator==(const Pixel&) const = default;
};

// Row-major 24-bit RGB raster with named channel access. Value type: copy it,
// mutate the copy. Channel identity is semantic and independent of any file
// format's on-disk byte order.
class RgbImage {
public:
  // Guard so a corrupt header cannot request a multi-gigabyte allocation.
  static constexpr std::uint64_t kMaxPixels = std::uint64_t{1} << 26;

  RgbImage(std::uint32_t width, std::uint32_t height, Pixel fill = Pixel{});

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }

  const Pixel& pixel(std::size_t index) const;
  void set_pixel(std::size_t index, Pixel value);

  std::uint8_t blue(std::size_t index) const;
  void set_blue(std::size_t index, std::uint8_t value);

  std::span<const Pixel> pixels() const noexcept { return pixels_; }
  std::span<Pixel> pixels() noexcept { return pixels_; }

  bool operator==(const RgbImage&) const = default;

private:
  void check_index(std::size_t index) const;

  std::uint32_t width_;
  std::uint32_t height_;
  std::vector<Pixel> pixels_;
};

}  // namespace stegc
