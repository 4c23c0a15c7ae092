#include "metrics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "error.hpp"

namespace stegc {

namespace {

void check_dimensions(const RgbImage& x, const RgbImage& y) {
  if (x.width() != y.width() || x.height() != y.height()) {
    fail(Status::dimension_mismatch,
         "image dimensions differ: " + std::to_string(x.width()) + "x" +
             std::to_string(x.height()) + " vs " + std::to_string(y.width()) + "x" +
             std::to_string(y.height()));
  }
}

std::uint64_t squared_error_sum(const RgbImage& x, const RgbImage& y) {
  std::uint64_t sum = 0;
  const auto xs = x.pixels();
  const auto ys = y.pixels();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int dr = int{xs[i].red} - int{ys[i].red};
    const int dg = int{xs[i].green} - int{ys[i].green};
    const int db = int{xs[i].blue} - int{ys[i].blue};
    sum += static_cast<std::uint64_t>(dr * dr + dg * dg + db * db);
  }
  return sum;
}

}  // namespace

double mse(const RgbImage& x, const RgbImage& y) {
  check_dimensions(x, y);
  const std::uint64_t samples = std::uint64_t{x.pixel_count()} * 3;
  return static_cast<double>(squared_error_sum(x, y)) / static_cast<double>(samples);
}

double rmse(const RgbImage& x, const RgbImage& y) {
  return std::sqrt(mse(x, y));
}

double psnr_from_mse(double mse_value, double maxpix) {
  if (!(maxpix > 0.0)) {
    fail(Status::invalid_argument, "maxpix must be positive");
  }
  if (mse_value < 0.0) {
    fail(Status::invalid_argument, "mse cannot be negative");
  }
  if (mse_value == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 20.0 * std::log10(maxpix / std::sqrt(mse_value));
}

double psnr(const RgbImage& x, const RgbImage& y, double maxpix) {
  return psnr_from_mse(mse(x, y), maxpix);
}

DiffMask diff_mask(const RgbImage& x, const RgbImage& y) {
  check_dimensions(x, y);
  DiffMask mask;
  const auto xs = x.pixels();
  const auto ys = y.pixels();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const bool differs = xs[i] != ys[i];
    if (xs[i].red != ys[i].red) ++mask.changed_red;
    if (xs[i].green != ys[i].green) ++mask.changed_green;
    if (xs[i].blue != ys[i].blue) ++mask.changed_blue;
    if (differs && !mask.first_diff_pixel) {
      mask.first_diff_pixel = i;
    }
  }
  return mask;
}

FidelityReport fidelity(const RgbImage& x, const RgbImage& y, double maxpix) {
  check_dimensions(x, y);
  FidelityReport report;
  report.samples = std::uint64_t{x.pixel_count()} * 3;
  report.mse = mse(x, y);
  report.rmse = std::sqrt(report.mse);
  report.psnr_db = psnr_from_mse(report.mse, maxpix);
  report.diff = diff_mask(x, y);
  return report;
}

}  // namespace stegc
