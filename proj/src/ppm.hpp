#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "image.hpp"

namespace stegc {

// Binary PPM (P6), maxval 255 only. The encoder emits the canonical header
// "P6\n<width> <height>\n255\n"; the decoder additionally accepts arbitrary
// header whitespace and '#' comments.
RgbImage decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const RgbImage& image);

}  // namespace stegc
