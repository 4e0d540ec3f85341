#pragma once

#include "graykeep/image.hpp"

namespace graykeep {

enum class RegionClass { kSmooth, kNormal, kComplex };

/// Local activity at (i, j): population variance of the grayscale sample and
/// its four axial neighbours, floored to an integer and capped at 255 so it
/// compares directly against the 8-bit thresholds. Exact integer arithmetic.
int delta(const GrayImage& gray, int i, int j);

/// Three-way split: delta <= t1 smooth, <= t2 normal, else complex.
/// Boundaries are inclusive toward the smoother class. Requires t1 <= t2.
RegionClass classify(int delta_value, int t1, int t2);

}  // namespace graykeep
