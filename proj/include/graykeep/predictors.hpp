#pragma once

#include <array>
#include <optional>

#include "graykeep/image.hpp"

namespace graykeep {

/// The nine causal samples around a pixel, all strictly after it in row-major
/// scan order (east / south). During forward embedding they are still
/// unmodified, and during the reverse decoding pass they are already
/// restored, so predictions agree bit-exactly on both ends.
///
///        x   e   ee
///   sw   s   se  see
///   ssw  ss  sse
struct Context9 {
  int e, ee;
  int s, se, sw;
  int ss, sse, ssw;
  int see;

  static Context9 at(const std::vector<uint8_t>& plane, int width, int i, int j) {
    auto px = [&](int r, int c) -> int {
      return plane[static_cast<size_t>(r) * width + c];
    };
    return Context9{px(i, j + 1),     px(i, j + 2),     px(i + 1, j),
                    px(i + 1, j + 1), px(i + 1, j - 1), px(i + 2, j),
                    px(i + 2, j + 1), px(i + 2, j - 1), px(i + 1, j + 2)};
  }
};

/// Median edge detector on (e, s, se).
int med_predict(const Context9& ctx);

/// Gradient-selective prediction: four directional gradient estimates held as
/// exact rationals, the two smallest picked (ties broken in the fixed order
/// horizontal, vertical, +45, -45), then a cross-weighted blend of their
/// causal pixels (e, s, sw, se respectively), rounded half away from zero.
int agsp_predict(const Context9& ctx);

/// The two first-level predictions for one pixel plus their derived values.
struct PredictionPair {
  int p_med = 0;
  int p_agsp = 0;

  int p1() const {  // round((p_med + p_agsp) / 2), half away from zero
    return (p_med + p_agsp + 1) / 2;
  }
  int p_min() const { return p_med < p_agsp ? p_med : p_agsp; }
  int p_max() const { return p_med < p_agsp ? p_agsp : p_med; }

  static PredictionPair from_context(const Context9& ctx) {
    return PredictionPair{med_predict(ctx), agsp_predict(ctx)};
  }
};

/// Prediction for the value after the first embedding step: the nearer of
/// p_min / p_max when the intermediate value has been pushed outside their
/// interval, nothing when it still lies strictly between them (in which case
/// the unit carries only one bit).
std::optional<int> second_level_predict(const PredictionPair& pair, int p_wm1);

/// Quadratic fit through three (gray, channel) sample pairs, evaluated at
/// gr_here. Exact rational interpolation when the gray values are pairwise
/// distinct; mean of the channel samples otherwise. Result rounded half away
/// from zero and clamped to [0, 255].
int poly_predict(const std::array<int, 3>& gr_neighbors,
                 const std::array<int, 3>& k, int gr_here);

}  // namespace graykeep
