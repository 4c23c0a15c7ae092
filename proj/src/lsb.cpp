#include "lsb.hpp"

#include <string>

#include "error.hpp"

namespace stegc {

namespace {

void check_bits_per_byte(unsigned bits_per_byte) {
  if (bits_per_byte < kLsbMinBits || bits_per_byte > kLsbMaxBits) {
    fail(Status::invalid_argument,
         "bits per channel byte must be 1..3, got " + std::to_string(bits_per_byte));
  }
}

// Channel byte c lives in pixel c/3; c%3 selects blue, green, red.
std::uint8_t& channel_ref(RgbImage& image, std::uint64_t c) {
  Pixel& px = image.pixels()[static_cast<std::size_t>(c / 3)];
  switch (c % 3) {
    case 0: return px.blue;
    case 1: return px.green;
    default: return px.red;
  }
}

std::uint8_t channel_value(const RgbImage& image, std::uint64_t c) {
  const Pixel& px = image.pixels()[static_cast<std::size_t>(c / 3)];
  switch (c % 3) {
    case 0: return px.blue;
    case 1: return px.green;
    default: return px.red;
  }
}

}  // namespace

std::uint64_t lsb_capacity_bits(const RgbImage& image, unsigned bits_per_byte) {
  check_bits_per_byte(bits_per_byte);
  return std::uint64_t{image.pixel_count()} * 3 * bits_per_byte;
}

std::uint64_t lsb_capacity_bytes(const RgbImage& image, unsigned bits_per_byte) {
  const std::uint64_t bytes = lsb_capacity_bits(image, bits_per_byte) / 8;
  return bytes < 4 ? 0 : bytes - 4;
}

RgbImage lsb_embed(const RgbImage& cover, unsigned bits_per_byte,
                   std::span<const std::uint8_t> message) {
  check_bits_per_byte(bits_per_byte);
  if (message.size() > lsb_capacity_bytes(cover, bits_per_byte)) {
    fail(Status::capacity_exceeded,
         "message of " + std::to_string(message.size()) + " bytes exceeds lsb" +
             std::to_string(bits_per_byte) + " capacity " +
             std::to_string(lsb_capacity_bytes(cover, bits_per_byte)));
  }

  const std::uint32_t length = static_cast<std::uint32_t>(message.size());
  const std::uint64_t total_bits = kLsbHeaderBits + std::uint64_t{8} * message.size();
  const auto stream_bit = [&](std::uint64_t t) -> std::uint8_t {
    if (t < kLsbHeaderBits) {
      return static_cast<std::uint8_t>((length >> (31 - t)) & 1u);
    }
    const std::uint64_t u = t - kLsbHeaderBits;
    return static_cast<std::uint8_t>((message[static_cast<std::size_t>(u / 8)] >> (7 - u % 8)) & 1u);
  };

  RgbImage stego = cover;
  for (std::uint64_t t = 0; t < total_bits; ++t) {
    const std::uint64_t c = t / bits_per_byte;
    const unsigned bit_pos = bits_per_byte - 1 - static_cast<unsigned>(t % bits_per_byte);
    std::uint8_t& byte = channel_ref(stego, c);
    byte = static_cast<std::uint8_t>((byte & ~(1u << bit_pos)) | (stream_bit(t) << bit_pos));
  }
  return stego;
}

std::vector<std::uint8_t> lsb_extract(const RgbImage& stego, unsigned bits_per_byte) {
  check_bits_per_byte(bits_per_byte);
  if (lsb_capacity_bits(stego, bits_per_byte) < kLsbHeaderBits) {
    fail(Status::length_exceeds_capacity, "carrier too small to hold a length header");
  }

  const auto carrier_bit = [&](std::uint64_t t) -> std::uint8_t {
    const std::uint64_t c = t / bits_per_byte;
    const unsigned bit_pos = bits_per_byte - 1 - static_cast<unsigned>(t % bits_per_byte);
    return static_cast<std::uint8_t>((channel_value(stego, c) >> bit_pos) & 1u);
  };

  std::uint32_t length = 0;
  for (std::uint64_t t = 0; t < kLsbHeaderBits; ++t) {
    length = (length << 1) | carrier_bit(t);
  }
  if (length > lsb_capacity_bytes(stego, bits_per_byte)) {
    fail(Status::length_exceeds_capacity,
         "declared payload length " + std::to_string(length) + " exceeds lsb" +
             std::to_string(bits_per_byte) + " capacity " +
             std::to_string(lsb_capacity_bytes(stego, bits_per_byte)) +
             " (corrupt or non-stego carrier)");
  }

  std::vector<std::uint8_t> message(length, 0);
  for (std::uint64_t u = 0; u < std::uint64_t{8} * length; ++u) {
    const std::uint8_t bit = carrier_bit(kLsbHeaderBits + u);
    message[static_cast<std::size_t>(u / 8)] |= static_cast<std::uint8_t>(bit << (7 - u % 8));
  }
  return message;
}

}  // namespace stegc
