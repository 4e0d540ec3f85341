#pragma once

#include <cstdint>

namespace graykeep {

// Exact integer helpers shared by the predictors and the grayscale
// arithmetic. Everything in the pipeline that both ends must agree on runs
// through these; no floating point.

inline int64_t floor_div(int64_t num, int64_t den) {
  int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline int64_t ceil_div(int64_t num, int64_t den) {
  return -floor_div(-num, den);
}

/// round(num/den), half away from zero. den must be > 0.
inline int64_t round_div_half_away(int64_t num, int64_t den) {
  if (num >= 0) return (2 * num + den) / (2 * den);
  return -((2 * (-num) + den) / (2 * den));
}

inline int clamp_byte(int64_t v) {
  if (v < 0) return 0;
  if (v > 255) return 255;
  return static_cast<int>(v);
}

}  // namespace graykeep
