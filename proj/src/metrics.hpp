#pragma once

#include <cstdint>
#include <optional>

#include "image.hpp"

namespace stegc {

// Peak sample value for 8-bit channels. A parameter of psnr, never inferred
// from image content.
inline constexpr double kMaxPix = 255.0;

struct DiffMask {
  std::uint64_t changed_red = 0;
  std::uint64_t changed_green = 0;
  std::uint64_t changed_blue = 0;
  std::optional<std::size_t> first_diff_pixel;

  bool operator==(const DiffMask&) const = default;
};

struct FidelityReport {
  double mse = 0.0;
  double rmse = 0.0;
  double psnr_db = 0.0;  // +infinity when the images are identical
  std::uint64_t samples = 0;
  DiffMask diff;
};

// Mean squared error over all 3*width*height channel samples. Accumulated in
// integers, so the result is exact and deterministic.
double mse(const RgbImage& x, const RgbImage& y);
double rmse(const RgbImage& x, const RgbImage& y);
double psnr(const RgbImage& x, const RgbImage& y, double maxpix = kMaxPix);
double psnr_from_mse(double mse_value, double maxpix = kMaxPix);

DiffMask diff_mask(const RgbImage& x, const RgbImage& y);
FidelityReport fidelity(const RgbImage& x, const RgbImage& y, double maxpix = kMaxPix);

}  // namespace stegc
