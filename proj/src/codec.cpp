#include "codec.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace stegc {

std::size_t capacity(const RgbImage& cover, std::size_t key_len) noexcept {
  const std::size_t pixels = cover.pixel_count();
  if (pixels < key_len + 2) {
    return 0;
  }
  return pixels - key_len - 2;
}

std::optional<std::size_t> find_terminator(std::span<const std::uint8_t> bytes) noexcept {
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] == kTerminator) {
      return i;
    }
  }
  return std::nullopt;
}

void validate_segment(std::span<const std::uint8_t> bytes, const char* what) {
  if (const auto offset = find_terminator(bytes)) {
    fail(Status::contains_terminator,
         std::string(what) + " contains terminator byte 0x00 at offset " +
             std::to_string(*offset));
  }
}

RgbImage embed(const RgbImage& cover, std::span<const std::uint8_t> key,
               std::span<const std::uint8_t> message) {
  validate_segment(key, "key");
  validate_segment(message, "message");

  const std::size_t need = key.size() + message.size() + 2;
  if (need > cover.pixel_count()) {
    fail(Status::capacity_exceeded,
         "message of " + std::to_string(message.size()) + " bytes exceeds capacity " +
             std::to_string(capacity(cover, key.size())) + " (cover has " +
             std::to_string(cover.pixel_count()) + " pixels, key " +
             std::to_string(key.size()) + " bytes)");
  }

  RgbImage stego = cover;
  std::size_t i = 0;
  for (const std::uint8_t b : key) {
    stego.set_blue(i++, b);
  }
  stego.set_blue(i++, kTerminator);
  for (const std::uint8_t b : message) {
    stego.set_blue(i++, b);
  }
  stego.set_blue(i++, kTerminator);
  return stego;
}

namespace {

// Collects blue bytes from `start` up to the next terminator.
std::vector<std::uint8_t> scan_segment(const RgbImage& stego, std::size_t start,
                                       const char* what) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = start; i < stego.pixel_count(); ++i) {
    const std::uint8_t b = stego.blue(i);
    if (b == kTerminator) {
      return out;
    }
    out.push_back(b);
  }
  fail(Status::missing_terminator,
       std::string("no terminator found scanning the ") + what + " segment");
}

}  // namespace

std::vector<std::uint8_t> extract(const RgbImage& stego, std::span<const std::uint8_t> key) {
  validate_segment(key, "key");

  const std::vector<std::uint8_t> embedded_key = scan_segment(stego, 0, "key");
  if (!std::equal(embedded_key.begin(), embedded_key.end(), key.begin(), key.end())) {
    fail(Status::key_mismatch, "Key is not matching");
  }
  return scan_segment(stego, embedded_key.size() + 1, "message");
}

EmbedLayout detect_layout(const RgbImage& stego) {
  const std::vector<std::uint8_t> key_segment = scan_segment(stego, 0, "key");
  const std::vector<std::uint8_t> msg_segment =
      scan_segment(stego, key_segment.size() + 1, "message");
  return EmbedLayout{key_segment.size(), msg_segment.size()};
}

}  // namespace stegc
