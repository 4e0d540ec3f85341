#include "graykeep/image.hpp"

namespace graykeep {

GrayImage to_gray(const ColorImage& img) {
  GrayImage out(img.width, img.height);
  const size_t n = static_cast<size_t>(img.width) * img.height;
  for (size_t k = 0; k < n; ++k) {
    out.v[k] = static_cast<uint8_t>(
        gray_of(img.plane[kRed][k], img.plane[kGreen][k], img.plane[kBlue][k]));
  }
  return out;
}

GrayImage classification_gray(const ColorImage& img) {
  GrayImage out = to_gray(img);
  for (int j = 0; j < img.width; ++j) {
    out.set(0, j, static_cast<uint8_t>(gray_of(img.at(kRed, 0, j) & ~1,
                                               img.at(kGreen, 0, j) & ~1,
                                               img.at(kBlue, 0, j) & ~1)));
  }
  return out;
}

int unit_index_bits(int width, int height) {
  uint64_t n = static_cast<uint64_t>(width) * static_cast<uint64_t>(height);
  int bits = 0;
  while ((1ull << bits) < n) ++bits;
  return bits;
}

}  // namespace graykeep
