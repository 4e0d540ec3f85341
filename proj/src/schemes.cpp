#include "graykeep/schemes.hpp"

#include <cstring>
#include <stdexcept>

#include "graykeep/expand.hpp"
#include "graykeep/green.hpp"

namespace graykeep {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kProposed: return "proposed";
    case Scheme::kHou: return "hou";
    case Scheme::kLi: return "li";
  }
  return "?";
}

Scheme scheme_from_name(const char* name) {
  if (strcmp(name, "proposed") == 0) return Scheme::kProposed;
  if (strcmp(name, "hou") == 0) return Scheme::kHou;
  if (strcmp(name, "li") == 0) return Scheme::kLi;
  throw std::invalid_argument(std::string("unknown method: ") + name);
}

RedEmbed embed_unit_red(Scheme scheme, RegionClass cls, int r_orig,
                        const UnitPredictions& preds, int bit0, int bit1,
                        bool have_second) {
  if (scheme == Scheme::kHou)
    return {expand_embed(r_orig, preds.poly_red, bit0), 1, false};

  if (cls == RegionClass::kNormal)
    return {expand_embed(r_orig, preds.red.p1(), bit0), 1, false};

  // Smooth unit.
  const int wm1 = expand_embed(r_orig, preds.red.p1(), bit0);
  if (scheme == Scheme::kLi) {
    if (!have_second) return {0, 0, true};
    return {expand_embed(wm1, preds.red.p1(), bit1), 2, false};
  }
  const auto p2 = second_level_predict(preds.red, wm1);
  if (!p2) return {wm1, 1, false};
  if (!have_second) return {0, 0, true};
  // Keep moving outward from whichever bound the first level crossed; the
  // lower bound wins the degenerate wm1 == p_min == p_max case, matching the
  // order second_level_predict resolves it.
  const bool upward = !(wm1 <= preds.red.p_min());
  return {expand_embed_directed(wm1, *p2, bit1, upward), 2, false};
}

RedExtract extract_unit_red(Scheme scheme, RegionClass cls, int r_marked,
                            const UnitPredictions& preds) {
  RedExtract out;
  if (scheme == Scheme::kHou) {
    auto [bit, orig] = expand_extract(r_marked, preds.poly_red);
    out.bits[0] = bit;
    out.count = 1;
    out.orig = orig;
    return out;
  }
  const int p1 = preds.red.p1();
  if (cls == RegionClass::kNormal) {
    auto [bit, orig] = expand_extract(r_marked, p1);
    out.bits[0] = bit;
    out.count = 1;
    out.orig = orig;
    return out;
  }
  if (scheme == Scheme::kLi) {
    auto [bit2, wm1] = expand_extract(r_marked, p1);
    auto [bit1, orig] = expand_extract(wm1, p1);
    out.bits[0] = bit1;
    out.bits[1] = bit2;
    out.count = 2;
    out.orig = orig;
    return out;
  }
  // Proposed, smooth: strictly inside (p_min, p_max) signals a one-bit unit;
  // anything at or beyond a bound came from the second level.
  const int pmin = preds.red.p_min();
  const int pmax = preds.red.p_max();
  if (r_marked > pmin && r_marked < pmax) {
    auto [bit, orig] = expand_extract(r_marked, p1);
    out.bits[0] = bit;
    out.count = 1;
    out.orig = orig;
    return out;
  }
  const bool upward = !(r_marked <= pmin);
  auto [bit2, wm1] = expand_extract_directed(r_marked, upward ? pmax : pmin, upward);
  auto [bit1, orig] = expand_extract(wm1, p1);
  out.bits[0] = bit1;
  out.bits[1] = bit2;
  out.count = 2;
  out.orig = orig;
  return out;
}

int embed_unit_blue(Scheme scheme, int b_orig, const UnitPredictions& preds,
                    int ecb_bit) {
  const int pred = scheme == Scheme::kHou ? preds.poly_blue : preds.blue.p1();
  return expand_embed(b_orig, pred, ecb_bit);
}

std::pair<int, int> extract_unit_blue(Scheme scheme, int b_marked,
                                      const UnitPredictions& preds) {
  const int pred = scheme == Scheme::kHou ? preds.poly_blue : preds.blue.p1();
  return expand_extract(b_marked, pred);
}

RedOutcomes red_outcomes(Scheme scheme, RegionClass cls, int r_orig,
                         const UnitPredictions& preds) {
  RedOutcomes out;
  for (int bit0 = 0; bit0 < 2; ++bit0) {
    const RedEmbed one = embed_unit_red(scheme, cls, r_orig, preds, bit0, 0, false);
    if (!one.ragged && one.consumed == 1) {
      out.finals[out.count] = one.marked;
      out.weight8[out.count] = 4;
      out.bits[out.count] = 1;
      ++out.count;
      continue;
    }
    for (int bit1 = 0; bit1 < 2; ++bit1) {
      const RedEmbed two = embed_unit_red(scheme, cls, r_orig, preds, bit0, bit1, true);
      out.finals[out.count] = two.marked;
      out.weight8[out.count] = 2;
      out.bits[out.count] = 2;
      ++out.count;
    }
  }
  return out;
}

bool unit_embed_safe(Scheme scheme, RegionClass cls, int r, int g, int b,
                     int gr, const UnitPredictions& preds) {
  const RedOutcomes red = red_outcomes(scheme, cls, r, preds);
  int blue_finals[2];
  for (int ecb = 0; ecb < 2; ++ecb) {
    blue_finals[ecb] = embed_unit_blue(scheme, b, preds, ecb);
    if (blue_finals[ecb] < 0 || blue_finals[ecb] > 255) return false;
  }
  for (int ri = 0; ri < red.count; ++ri) {
    if (red.finals[ri] < 0 || red.finals[ri] > 255) return false;
    for (int bi = 0; bi < 2; ++bi)
      if (!adjust_green(gr, red.finals[ri], blue_finals[bi], g).feasible)
        return false;
  }
  return true;
}

}  // namespace graykeep
