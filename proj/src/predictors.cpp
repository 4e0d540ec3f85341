#include "graykeep/predictors.hpp"

#include <cstdlib>

#include "graykeep/intmath.hpp"

namespace graykeep {

int med_predict(const Context9& ctx) {
  const int e = ctx.e, s = ctx.s, se = ctx.se;
  const int lo = e < s ? e : s;
  const int hi = e < s ? s : e;
  int p;
  if (se >= hi)
    p = lo;
  else if (se <= lo)
    p = hi;
  else
    p = s + e - se;
  return clamp_byte(p);
}

namespace {

inline int iabs(int a) { return a < 0 ? -a : a; }

// Directional gradient as an exact fraction num/den (the formula's
// "sum/den + 1" folded into the numerator).
struct Gradient {
  int64_t num;
  int64_t den;
  int candidate;  // the causal pixel this direction predicts with
};

inline bool less_than(const Gradient& a, const Gradient& b) {
  return a.num * b.den < b.num * a.den;
}

}  // namespace

int agsp_predict(const Context9& ctx) {
  const int sum_h = 2 * iabs(ctx.e - ctx.ee) + 2 * iabs(ctx.s - ctx.se) +
                    2 * iabs(ctx.s - ctx.sw) + iabs(ctx.ss - ctx.sse) +
                    iabs(ctx.ss - ctx.ssw) + iabs(ctx.se - ctx.see);
  const int sum_v = 2 * iabs(ctx.e - ctx.se) + 2 * iabs(ctx.s - ctx.ss) +
                    iabs(ctx.sw - ctx.ssw) + iabs(ctx.ee - ctx.see) +
                    iabs(ctx.se - ctx.sse);
  const int sum_p45 = 2 * iabs(ctx.e - ctx.s) + 2 * iabs(ctx.s - ctx.ssw) +
                      iabs(ctx.se - ctx.ss) + iabs(ctx.ee - ctx.see);
  const int sum_m45 = 2 * iabs(ctx.e - ctx.see) + 2 * iabs(ctx.s - ctx.sse) +
                      iabs(ctx.sw - ctx.ss);

  // Order fixed: horizontal, vertical, +45, -45.
  const Gradient dirs[4] = {
      {sum_h + 9, 9, ctx.e},
      {sum_v + 7, 7, ctx.s},
      {sum_p45 + 6, 6, ctx.sw},
      {sum_m45 + 5, 5, ctx.se},
  };

  int min1 = 0;
  for (int d = 1; d < 4; ++d)
    if (less_than(dirs[d], dirs[min1])) min1 = d;
  int min2 = min1 == 0 ? 1 : 0;
  for (int d = 0; d < 4; ++d) {
    if (d == min1) continue;
    if (less_than(dirs[d], dirs[min2])) min2 = d;
  }

  const Gradient& a = dirs[min1];
  const Gradient& b = dirs[min2];
  // (Da*Cb + Db*Ca) / (Da + Db) over the exact fractions.
  const int64_t num = a.num * b.den * b.candidate + b.num * a.den * a.candidate;
  const int64_t den = a.num * b.den + b.num * a.den;
  return clamp_byte(round_div_half_away(num, den));
}

std::optional<int> second_level_predict(const PredictionPair& pair, int p_wm1) {
  if (p_wm1 <= pair.p_min()) return pair.p_min();
  if (p_wm1 >= pair.p_max()) return pair.p_max();
  return std::nullopt;
}

int poly_predict(const std::array<int, 3>& gr_neighbors,
                 const std::array<int, 3>& k, int gr_here) {
  const int g0 = gr_neighbors[0], g1 = gr_neighbors[1], g2 = gr_neighbors[2];
  if (g0 == g1 || g0 == g2 || g1 == g2) {
    // Singular fit; fall back to the plain mean of the channel samples.
    return clamp_byte(round_div_half_away(k[0] + k[1] + k[2], 3));
  }
  // Lagrange form of the interpolating quadratic, evaluated at gr_here with a
  // common denominator so everything stays in exact integers.
  const int64_t x = gr_here;
  const int64_t n0 = static_cast<int64_t>(k[0]) * (x - g1) * (x - g2) * (g1 - g2);
  const int64_t n1 = static_cast<int64_t>(k[1]) * (x - g0) * (x - g2) * -(g0 - g2);
  const int64_t n2 = static_cast<int64_t>(k[2]) * (x - g0) * (x - g1) * (g0 - g1);
  int64_t num = n0 + n1 + n2;
  int64_t den = static_cast<int64_t>(g0 - g1) * (g0 - g2) * (g1 - g2);
  if (den < 0) {
    den = -den;
    num = -num;
  }
  return clamp_byte(round_div_half_away(num, den));
}

}  // namespace graykeep
