#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "image.hpp"

namespace stegc {

// Lossless carriers only. Lossy formats are rejected outright because
// byte-level payloads do not survive recompression.
enum class ImageFormat { ppm, png };

struct DecodedImage {
  RgbImage image;
  bool alpha_stripped = false;
};

DecodedImage decode_image(std::span<const std::uint8_t> bytes, ImageFormat format);
std::vector<std::uint8_t> encode_image(const RgbImage& image, ImageFormat format);

// Sniffs the format from leading magic bytes.
ImageFormat detect_format(std::span<const std::uint8_t> bytes);

DecodedImage load_image_file(const std::string& path);
void save_image_file(const RgbImage& image, const std::string& path, ImageFormat format);

}  // namespace stegc
