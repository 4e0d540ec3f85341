#pragma once

#include <utility>

namespace graykeep {

/// Prediction-error expansion of one bit: the error doubles and the bit
/// lands in its low position, moving away from the prediction. Errors >= 0
/// expand upward, errors < 0 downward. No range clamping here; the overflow
/// planner keeps marked samples representable.
inline int expand_embed(int value, int pred, int bit) {
  const int pe = value - pred;
  return pe >= 0 ? value + pe + bit : value + pe - bit;
}

/// Exact inverse of expand_embed: (bit, original value).
inline std::pair<int, int> expand_extract(int marked, int pred) {
  const int e = marked - pred;
  if (e >= 0) {
    const int bit = e % 2;
    return {bit, pred + (e - bit) / 2};
  }
  const int bit = (-e) % 2;
  return {bit, pred + (e + bit) / 2};
}

/// Expansion with the error sign pinned by the caller instead of derived
/// from the error value. The second embedding level needs this: its
/// prediction is clamped to whichever of the two first-level predictions the
/// intermediate value crossed, and a zero error at that boundary must keep
/// moving outward (down at the lower bound, up at the upper) or the decoder
/// could not tell a one-bit unit from a two-bit one.
inline int expand_embed_directed(int value, int pred, int bit, bool upward) {
  const int pe = value - pred;
  return upward ? value + pe + bit : value + pe - bit;
}

inline std::pair<int, int> expand_extract_directed(int marked, int pred,
                                                   bool upward) {
  const int e = marked - pred;
  if (upward) {
    const int bit = e % 2;
    return {bit, pred + (e - bit) / 2};
  }
  const int bit = (-e) % 2;
  return {bit, pred + (e + bit) / 2};
}

}  // namespace graykeep
