#include "graykeep/green.hpp"

#include <stdexcept>

#include "graykeep/errors.hpp"
#include "graykeep/intmath.hpp"

namespace graykeep {

GreenCandidates green_candidates(int gr_target, int r, int b) {
  // round((299 r + 587 g + 114 b) / 1000) == gr_target, with round half up,
  // holds iff 299 r + 587 g + 114 b lies in [1000 gr - 500, 1000 gr + 499].
  const int64_t base = 299ll * r + 114ll * b;
  int64_t lo = ceil_div(1000ll * gr_target - 500 - base, 587);
  int64_t hi = floor_div(1000ll * gr_target + 499 - base, 587);
  if (lo < 0) lo = 0;
  if (hi > 255) hi = 255;
  GreenCandidates c;
  if (lo <= hi) {
    c.lo = static_cast<int>(lo);
    c.hi = static_cast<int>(hi);
  }
  return c;
}

GreenAdjust adjust_green(int gr_target, int r_marked, int b_marked,
                         int g_orig) {
  const GreenCandidates c = green_candidates(gr_target, r_marked, b_marked);
  if (c.count() == 0) return {0, false};
  // Candidates are consecutive integers, so clamping picks the nearest one;
  // adjacent candidates can never be equidistant from an integer.
  int g = g_orig;
  if (g < c.lo) g = c.lo;
  if (g > c.hi) g = c.hi;
  return {g, true};
}

int compute_ecb(int gr, int r_orig, int b_orig, int g_orig) {
  const GreenCandidates c = green_candidates(gr, r_orig, b_orig);
  if (!c.contains(g_orig))
    throw std::logic_error("compute_ecb: green not in its own candidate set");
  return g_orig - c.lo;
}

int recover_green(int gr, int r_orig, int b_orig, int ecb) {
  const GreenCandidates c = green_candidates(gr, r_orig, b_orig);
  const int g = c.lo + ecb;
  if (ecb < 0 || ecb > 1 || c.count() == 0 || g > c.hi)
    throw CodecError("ECB contradiction: no matching green candidate");
  return g;
}

}  // namespace graykeep
