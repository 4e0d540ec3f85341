#pragma once

namespace graykeep {

/// Integer green values g whose pixel (r, g, b) rounds to the target
/// grayscale. The weighted-sum window spans 999/587 < 2 green steps, so the
/// set is always one or two consecutive integers (possibly empty once
/// clipped to [0, 255]).
struct GreenCandidates {
  int lo = 0;
  int hi = -1;  // hi < lo means empty

  int count() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(int g) const { return g >= lo && g <= hi; }
};

GreenCandidates green_candidates(int gr_target, int r, int b);

struct GreenAdjust {
  int g = 0;
  bool feasible = false;
};

/// The green value closest to g_orig that keeps the marked pixel's grayscale
/// at gr_target given the already-marked red and blue samples. Ties broken
/// toward the smaller value. feasible == false when no green in [0, 255]
/// attains the target.
GreenAdjust adjust_green(int gr_target, int r_marked, int b_marked, int g_orig);

/// Index (0 or 1) of the original green within the ascending candidate set
/// for the original red/blue samples. This single bit is what the decoder
/// needs to pick the right green back out.
int compute_ecb(int gr, int r_orig, int b_orig, int g_orig);

/// Inverse of compute_ecb. Throws CodecError when ecb points past the
/// candidate set (corrupt stream).
int recover_green(int gr, int r_orig, int b_orig, int ecb);

}  // namespace graykeep
