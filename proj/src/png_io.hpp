#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "image.hpp"

namespace stegc {

struct PngImage {
  RgbImage image;
  // Set when the source carried an alpha channel that was dropped on load.
  bool alpha_stripped = false;
};

// 8-bit truecolor only. Truecolor-with-alpha loads with the alpha dropped;
// palette and grayscale images are rejected, as is 16-bit depth.
PngImage decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_png(const RgbImage& image);

}  // namespace stegc
