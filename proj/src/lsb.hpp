#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "image.hpp"

namespace stegc {

// LSB-k reference codec, k in {1,2,3}. The bit stream is a 32-bit big-endian
// payload length followed by the payload bytes (most significant bit first).
// It fills the k low bits of each channel byte, walking channels blue, green,
// red within each row-major pixel; within a byte the stream fills the k-bit
// field from its high bit down. Per-byte perturbation is bounded by 2^k - 1.
inline constexpr unsigned kLsbMinBits = 1;
inline constexpr unsigned kLsbMaxBits = 3;
inline constexpr std::uint64_t kLsbHeaderBits = 32;

std::uint64_t lsb_capacity_bits(const RgbImage& image, unsigned bits_per_byte);

// Bit capacity divided by 8, less the 4-byte length prefix, clamped at zero.
std::uint64_t lsb_capacity_bytes(const RgbImage& image, unsigned bits_per_byte);

RgbImage lsb_embed(const RgbImage& cover, unsigned bits_per_byte,
                   std::span<const std::uint8_t> message);
std::vector<std::uint8_t> lsb_extract(const RgbImage& stego, unsigned bits_per_byte);

}  // namespace stegc
