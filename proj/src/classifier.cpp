#include "graykeep/classifier.hpp"

#include <stdexcept>

namespace graykeep {

int delta(const GrayImage& gray, int i, int j) {
  TraversalRegion region(gray.width, gray.height);
  if (!region.contains(i, j))
    throw std::out_of_range("delta: position outside embeddable region");
  const int x0 = gray.at(i, j);
  const int x1 = gray.at(i - 1, j);
  const int x2 = gray.at(i + 1, j);
  const int x3 = gray.at(i, j - 1);
  const int x4 = gray.at(i, j + 1);
  const int64_t sum = x0 + x1 + x2 + x3 + x4;
  const int64_t sumsq = static_cast<int64_t>(x0) * x0 +
                        static_cast<int64_t>(x1) * x1 +
                        static_cast<int64_t>(x2) * x2 +
                        static_cast<int64_t>(x3) * x3 +
                        static_cast<int64_t>(x4) * x4;
  // floor(population variance) == floor((5*sumsq - sum^2) / 25)
  const int64_t v = (5 * sumsq - sum * sum) / 25;
  return v > 255 ? 255 : static_cast<int>(v);
}

RegionClass classify(int delta_value, int t1, int t2) {
  if (t1 > t2) throw std::invalid_argument("classify: t1 > t2");
  if (delta_value <= t1) return RegionClass::kSmooth;
  if (delta_value <= t2) return RegionClass::kNormal;
  return RegionClass::kComplex;
}

}  // namespace graykeep
