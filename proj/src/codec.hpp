#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "image.hpp"

namespace stegc {

// Sentinel byte written after the key segment and after the message segment.
// Keys and messages must not contain it.
inline constexpr std::uint8_t kTerminator = 0x00;

// Blue-channel layout of a stego image, in row-major pixel order:
//   [0, key_len)                 key bytes
//   key_len                      terminator
//   [key_len+1, key_len+1+msg_len)  message bytes
//   key_len+1+msg_len            terminator
struct EmbedLayout {
  std::size_t key_len = 0;
  std::size_t msg_len = 0;

  std::size_t key_term() const noexcept { return key_len; }
  std::size_t msg_begin() const noexcept { return key_len + 1; }
  std::size_t msg_term() const noexcept { return key_len + 1 + msg_len; }
  std::size_t touched_pixels() const noexcept { return key_len + msg_len + 2; }

  bool operator==(const EmbedLayout&) const = default;
};

// Largest message embeddable alongside a key of the given length:
// max(0, pixels - key_len - 2).
std::size_t capacity(const RgbImage& cover, std::size_t key_len) noexcept;

// Offset of the first terminator byte, if any.
std::optional<std::size_t> find_terminator(std::span<const std::uint8_t> bytes) noexcept;

// Throws contains-terminator naming `what` and the offending offset.
void validate_segment(std::span<const std::uint8_t> bytes, const char* what);

// Writes key, terminator, message, terminator into consecutive blue channels
// starting at pixel 0. Every red and green sample, and every blue sample past
// the layout, is bit-identical to the cover.
RgbImage embed(const RgbImage& cover, std::span<const std::uint8_t> key,
               std::span<const std::uint8_t> message);

// Scans blue channels for the key segment, verifies it against the supplied
// key, then collects the message segment.
std::vector<std::uint8_t> extract(const RgbImage& stego, std::span<const std::uint8_t> key);

// Locates both terminators without key verification.
EmbedLayout detect_layout(const RgbImage& stego);

}  // namespace stegc
