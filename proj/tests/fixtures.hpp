#pragma once

// Deterministic procedural cover images for tests and the acceptance suite.
// Multi-octave value noise with per-channel offsets gives natural-looking
// smooth/busy structure; optional saturated patches exercise the overflow
// location map.

#include <algorithm>
#include <vector>

#include "graykeep/bits.hpp"
#include "graykeep/image.hpp"

namespace graykeep::testing {

struct Octave {
  int spacing;
  int amplitude;  // contribution range is +-amplitude
};

struct FixtureSpec {
  int width = 64;
  int height = 64;
  int base_lo = 24, base_hi = 231;  // coarse luminance range
  int base_spacing = 16;
  std::vector<Octave> octaves;  // finer detail layers
  int color_amp = 24;           // per-channel lattice offset
  int dither = 2;               // per-pixel, per-channel noise
  bool saturated_patches = false;
  uint64_t seed = 1;
};

namespace detail {

class Lattice {
 public:
  Lattice(int width, int height, int spacing, int lo, int hi,
          Xorshift64Star& rng)
      : spacing_(spacing), cols_(width / spacing + 2) {
    const int rows = height / spacing + 2;
    values_.resize(static_cast<size_t>(rows) * cols_);
    for (auto& v : values_)
      v = static_cast<int>(lo + rng.next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Bilinear sample scaled by 256 to stay in integers.
  int sample256(int i, int j) const {
    const int i0 = i / spacing_, j0 = j / spacing_;
    const int fi = (i % spacing_) * 256 / spacing_;
    const int fj = (j % spacing_) * 256 / spacing_;
    const int v00 = at(i0, j0), v01 = at(i0, j0 + 1);
    const int v10 = at(i0 + 1, j0), v11 = at(i0 + 1, j0 + 1);
    const int top = v00 * (256 - fj) + v01 * fj;
    const int bot = v10 * (256 - fj) + v11 * fj;
    return (top * (256 - fi) + bot * fi) >> 8;
  }

 private:
  int at(int r, int c) const { return values_[static_cast<size_t>(r) * cols_ + c]; }
  int spacing_;
  int cols_;
  std::vector<int> values_;
};

}  // namespace detail

inline ColorImage make_fixture(const FixtureSpec& spec) {
  Xorshift64Star rng(spec.seed);
  detail::Lattice base(spec.width, spec.height, spec.base_spacing, spec.base_lo,
                       spec.base_hi, rng);
  std::vector<detail::Lattice> fine;
  for (const Octave& o : spec.octaves)
    fine.emplace_back(spec.width, spec.height, o.spacing, -o.amplitude,
                      o.amplitude, rng);
  std::vector<detail::Lattice> tint;
  for (int c = 0; c < 3; ++c)
    tint.emplace_back(spec.width, spec.height, spec.base_spacing * 2,
                      -spec.color_amp, spec.color_amp, rng);

  ColorImage img(spec.width, spec.height);
  for (int i = 0; i < spec.height; ++i) {
    for (int j = 0; j < spec.width; ++j) {
      int lum256 = base.sample256(i, j);
      for (const auto& o : fine) lum256 += o.sample256(i, j);
      for (int c = 0; c < 3; ++c) {
        int v256 = lum256 + tint[c].sample256(i, j);
        int v = v256 >> 8;
        if (spec.dither > 0)
          v += static_cast<int>(rng.next_below(2 * spec.dither + 1)) - spec.dither;
        img.set(static_cast<Channel>(c), i, j,
                static_cast<uint8_t>(std::clamp(v, 0, 255)));
      }
    }
  }
  if (spec.saturated_patches) {
    for (int i = 8; i < 11 && i < spec.height; ++i)
      for (int j = 8; j < 11 && j < spec.width; ++j)
        for (int c = 0; c < 3; ++c)
          img.set(static_cast<Channel>(c), i, j, 255);
    for (int i = 20; i < 22 && i < spec.height; ++i)
      for (int j = 4; j < 6 && j < spec.width; ++j)
        for (int c = 0; c < 3; ++c)
          img.set(static_cast<Channel>(c), i, j, 0);
  }
  return img;
}

/// Four 512x512 stand-ins with graded texture, used when the genuine
/// benchmark photographs are not available.
inline ColorImage make_standin(int which) {
  FixtureSpec spec;
  spec.width = spec.height = 512;
  spec.seed = 0xA11CE + which;
  switch (which) {
    case 0:  // very smooth, high key
      spec.base_spacing = 64;
      spec.base_lo = 40;
      spec.base_hi = 235;
      spec.octaves = {{16, 6}};
      spec.dither = 1;
      break;
    case 1:  // moderate detail
      spec.base_spacing = 32;
      spec.octaves = {{8, 10}};
      spec.dither = 2;
      break;
    case 2:  // busier scene
      spec.base_spacing = 24;
      spec.octaves = {{6, 14}};
      spec.dither = 3;
      break;
    default:  // heavy texture
      spec.base_spacing = 12;
      spec.base_lo = 48;
      spec.base_hi = 207;
      spec.octaves = {{4, 20}};
      spec.dither = 6;
      break;
  }
  return make_fixture(spec);
}

inline const char* standin_name(int which) {
  static const char* names[4] = {"synth_smooth", "synth_portrait",
                                 "synth_scene", "synth_texture"};
  return names[which];
}

}  // namespace graykeep::testing
