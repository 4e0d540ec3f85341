#pragma once

#include <array>
#include <utility>
#include <vector>

#include "graykeep/image.hpp"

namespace graykeep {

/// Mean squared error over all width*height*3 samples.
double mean_squared_error(const ColorImage& a, const ColorImage& b);

/// 10*log10(255^2 / MSE); +infinity for identical images.
double psnr(const ColorImage& a, const ColorImage& b);

/// Squared-error sum of one unit across its three channels, halved when the
/// unit carried two red bits (per-bit normalization).
double unit_distortion(const std::array<int, 3>& cover_rgb,
                       const std::array<int, 3>& marked_rgb, int bits_in_r);

struct InvarianceReport {
  std::vector<std::pair<int, int>> changed;  // (row, col) where gray differs

  size_t count() const { return changed.size(); }
  bool all_in_row0() const {
    for (const auto& rc : changed)
      if (rc.first != 0) return false;
    return true;
  }
};

/// Pixels whose grayscale differs between the two images. A valid embedding
/// changes grayscale only in the row-0 header pixels.
InvarianceReport invariance_report(const ColorImage& cover,
                                   const ColorImage& marked);

}  // namespace graykeep
