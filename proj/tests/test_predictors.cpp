#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graykeep/bits.hpp"
#include "graykeep/predictors.hpp"

using namespace graykeep;

namespace {

Context9 constant_context(int c) { return Context9{c, c, c, c, c, c, c, c, c}; }

Context9 random_context(Xorshift64Star& rng) {
  auto v = [&] { return static_cast<int>(rng.next_below(256)); };
  return Context9{v(), v(), v(), v(), v(), v(), v(), v(), v()};
}

int context_min(const Context9& c) {
  return std::min({c.e, c.ee, c.s, c.se, c.sw, c.ss, c.sse, c.ssw, c.see});
}

int context_max(const Context9& c) {
  return std::max({c.e, c.ee, c.s, c.se, c.sw, c.ss, c.sse, c.ssw, c.see});
}

// Independent restatement of the gradient-selective predictor (same tie
// order), written over double-held integers. Products stay below 2^53 so
// every comparison is exact; the one final division is correctly rounded and
// the blend is never closer than 1/(2*den) to a rounding boundary without
// being exactly on it.
int agsp_oracle(const Context9& c) {
  const double sums[4] = {
      2.0 * std::abs(c.e - c.ee) + 2 * std::abs(c.s - c.se) +
          2 * std::abs(c.s - c.sw) + std::abs(c.ss - c.sse) +
          std::abs(c.ss - c.ssw) + std::abs(c.se - c.see),
      2.0 * std::abs(c.e - c.se) + 2 * std::abs(c.s - c.ss) +
          std::abs(c.sw - c.ssw) + std::abs(c.ee - c.see) +
          std::abs(c.se - c.sse),
      2.0 * std::abs(c.e - c.s) + 2 * std::abs(c.s - c.ssw) +
          std::abs(c.se - c.ss) + std::abs(c.ee - c.see),
      2.0 * std::abs(c.e - c.see) + 2 * std::abs(c.s - c.sse) +
          std::abs(c.sw - c.ss),
  };
  const double den[4] = {9, 7, 6, 5};
  double num[4];
  for (int k = 0; k < 4; ++k) num[k] = sums[k] + den[k];
  const int cand[4] = {c.e, c.s, c.sw, c.se};
  auto less = [&](int a, int b) { return num[a] * den[b] < num[b] * den[a]; };
  int m1 = 0;
  for (int k = 1; k < 4; ++k)
    if (less(k, m1)) m1 = k;
  int m2 = m1 == 0 ? 1 : 0;
  for (int k = 0; k < 4; ++k) {
    if (k == m1) continue;
    if (less(k, m2)) m2 = k;
  }
  const double blend_num =
      num[m1] * den[m2] * cand[m2] + num[m2] * den[m1] * cand[m1];
  const double blend_den = num[m1] * den[m2] + num[m2] * den[m1];
  return static_cast<int>(std::floor(blend_num / blend_den + 0.5));
}

}  // namespace

TEST_CASE("med_predict branches") {
  Context9 ctx = constant_context(5);
  CHECK(med_predict(ctx) == 5);

  ctx.e = 3;
  ctx.s = 7;
  ctx.se = 9;  // se >= max(s, e) -> min(e, s)
  CHECK(med_predict(ctx) == 3);

  ctx.se = 1;  // se <= min(s, e) -> max(e, s)
  CHECK(med_predict(ctx) == 7);

  ctx.se = 5;  // otherwise s + e - se
  CHECK(med_predict(ctx) == 5);
}

TEST_CASE("med_predict stays in byte range") {
  Xorshift64Star rng(11);
  for (int t = 0; t < 20000; ++t) {
    const int p = med_predict(random_context(rng));
    CHECK(p >= 0);
    CHECK(p <= 255);
  }
}

TEST_CASE("agsp_predict on a constant field") {
  CHECK(agsp_predict(constant_context(0)) == 0);
  CHECK(agsp_predict(constant_context(131)) == 131);
  CHECK(agsp_predict(constant_context(255)) == 255);
}

TEST_CASE("agsp_predict worked example") {
  // Gradients: horizontal 60/9+1, vertical 1, +45 50/6+1, -45 7. The two
  // smallest are vertical (candidate s=20) and -45 (candidate se=10), giving
  // (1*10 + 7*20) / 8 = 18.75 -> 19.
  const Context9 ctx{10, 10, 20, 10, 30, 20, 10, 30, 10};
  CHECK(agsp_predict(ctx) == 19);
}

TEST_CASE("agsp_predict agrees with an independent evaluation") {
  Xorshift64Star rng(12);
  for (int t = 0; t < 50000; ++t) {
    const Context9 ctx = random_context(rng);
    CHECK(agsp_predict(ctx) == agsp_oracle(ctx));
  }
  // small-valued contexts hit exact gradient ties far more often
  for (int t = 0; t < 50000; ++t) {
    auto v = [&] { return static_cast<int>(rng.next_below(4)); };
    const Context9 ctx{v(), v(), v(), v(), v(), v(), v(), v(), v()};
    CHECK(agsp_predict(ctx) == agsp_oracle(ctx));
  }
}

TEST_CASE("agsp_predict is a convex blend of context samples") {
  Xorshift64Star rng(13);
  for (int t = 0; t < 20000; ++t) {
    const Context9 ctx = random_context(rng);
    const int p = agsp_predict(ctx);
    CHECK(p >= context_min(ctx));
    CHECK(p <= context_max(ctx));
  }
}

TEST_CASE("prediction pair derived values") {
  const PredictionPair pair{104, 102};
  CHECK(pair.p1() == 103);
  CHECK(pair.p_min() == 102);
  CHECK(pair.p_max() == 104);

  Xorshift64Star rng(14);
  for (int t = 0; t < 10000; ++t) {
    const PredictionPair p{static_cast<int>(rng.next_below(256)),
                           static_cast<int>(rng.next_below(256))};
    CHECK(p.p_min() <= p.p1());
    CHECK(p.p1() <= p.p_max());
  }
}

TEST_CASE("second_level_predict case split") {
  CHECK(second_level_predict({104, 102}, 104) == 104);
  CHECK(second_level_predict({104, 102}, 102) == 102);
  CHECK_FALSE(second_level_predict({100, 106}, 103).has_value());
  CHECK(second_level_predict({90, 90}, 90) == 90);
  CHECK(second_level_predict({90, 90}, 91) == 90);
}

TEST_CASE("second level clamps at least as tight as the average") {
  Xorshift64Star rng(15);
  for (int t = 0; t < 50000; ++t) {
    const PredictionPair pair{static_cast<int>(rng.next_below(256)),
                              static_cast<int>(rng.next_below(256))};
    const int wm1 = static_cast<int>(rng.next_below(256));
    const auto p2 = second_level_predict(pair, wm1);
    if (!p2) continue;
    CHECK(std::abs(wm1 - *p2) <= std::abs(wm1 - pair.p1()));
  }
}

TEST_CASE("poly_predict interpolates exactly on distinct grays") {
  CHECK(poly_predict({10, 20, 30}, {10, 20, 30}, 15) == 15);
  // exact quadratic data (bounds chosen so nothing clamps) reproduces it
  Xorshift64Star rng(16);
  for (int t = 0; t < 5000; ++t) {
    const int a = static_cast<int>(rng.next_below(41));
    const int b = static_cast<int>(rng.next_below(5));
    const int c = static_cast<int>(rng.next_below(2));
    int g[4];
    g[0] = static_cast<int>(rng.next_below(6));
    g[1] = g[0] + 1 + static_cast<int>(rng.next_below(2));
    g[2] = g[1] + 1 + static_cast<int>(rng.next_below(2));
    g[3] = static_cast<int>(rng.next_below(12));
    auto q = [&](int x) { return a + b * x + c * x * x; };
    CHECK(poly_predict({g[0], g[1], g[2]}, {q(g[0]), q(g[1]), q(g[2])}, g[3]) ==
          q(g[3]));
  }
}

TEST_CASE("poly_predict singular fallback is the mean") {
  CHECK(poly_predict({50, 50, 50}, {10, 20, 30}, 50) == 20);
  CHECK(poly_predict({7, 7, 7}, {9, 9, 9}, 7) == 9);
  CHECK(poly_predict({10, 10, 30}, {10, 20, 30}, 12) == 20);
}

TEST_CASE("poly_predict clamps to byte range") {
  const int p = poly_predict({10, 11, 12}, {10, 60, 110}, 200);
  CHECK(p >= 0);
  CHECK(p <= 255);
  const int q = poly_predict({10, 11, 12}, {110, 60, 10}, 200);
  CHECK(q >= 0);
  CHECK(q <= 255);
}
