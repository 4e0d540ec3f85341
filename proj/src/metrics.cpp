#include "graykeep/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace graykeep {

namespace {

void require_same_size(const ColorImage& a, const ColorImage& b) {
  if (!a.same_size(b))
    throw std::invalid_argument("image dimension mismatch");
}

}  // namespace

double mean_squared_error(const ColorImage& a, const ColorImage& b) {
  require_same_size(a, b);
  uint64_t sum = 0;
  const size_t n = static_cast<size_t>(a.width) * a.height;
  for (int c = 0; c < 3; ++c) {
    for (size_t k = 0; k < n; ++k) {
      const int d = static_cast<int>(a.plane[c][k]) - static_cast<int>(b.plane[c][k]);
      sum += static_cast<uint64_t>(d) * d;
    }
  }
  return static_cast<double>(sum) / (static_cast<double>(n) * 3.0);
}

double psnr(const ColorImage& a, const ColorImage& b) {
  const double mse = mean_squared_error(a, b);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double unit_distortion(const std::array<int, 3>& cover_rgb,
                       const std::array<int, 3>& marked_rgb, int bits_in_r) {
  double sum = 0.0;
  for (int c = 0; c < 3; ++c) {
    const double d = marked_rgb[c] - cover_rgb[c];
    sum += d * d;
  }
  return bits_in_r == 2 ? sum / 2.0 : sum;
}

InvarianceReport invariance_report(const ColorImage& cover,
                                   const ColorImage& marked) {
  require_same_size(cover, marked);
  InvarianceReport report;
  const GrayImage ga = to_gray(cover);
  const GrayImage gb = to_gray(marked);
  for (int i = 0; i < cover.height; ++i)
    for (int j = 0; j < cover.width; ++j)
      if (ga.at(i, j) != gb.at(i, j)) report.changed.emplace_back(i, j);
  return report;
}

}  // namespace graykeep
