#include "image.hpp"

#include <string>

#include "error.hpp"

namespace stegc {

RgbImage::RgbImage(std::uint32_t width, std::uint32_t height, Pixel fill)
    : width_(width), height_(height) {
  if (width == 0 || height == 0) {
    fail(Status::invalid_argument, "image dimensions must be positive");
  }
  const std::uint64_t count = std::uint64_t{width} * height;
  if (count > kMaxPixels) {
    fail(Status::invalid_argument,
         "image of " + std::to_string(count) + " pixels exceeds the supported maximum");
  }
  pixels_.assign(static_cast<std::size_t>(count), fill);
}

void RgbImage::check_index(std::size_t index) const {
  if (index >= pixels_.size()) {
    fail(Status::index_out_of_range,
         "pixel index " + std::to_string(index) + " out of range (image has " +
             std::to_string(pixels_.size()) + " pixels)");
  }
}

const Pixel& RgbImage::pixel(std::size_t index) const {
  check_index(index);
  return pixels_[index];
}

void RgbImage::set_pixel(std::size_t index, Pixel value) {
  check_index(index);
  pixels_[index] = value;
}

std::uint8_t RgbImage::blue(std::size_t index) const {
  check_index(index);
  return pixels_[index].blue;
}

void RgbImage::set_blue(std::size_t index, std::uint8_t value) {
  check_index(index);
  pixels_[index].blue = value;
}

}  // namespace stegc
