#pragma once

#include <cstdint>
#include <vector>

#include "graykeep/bits.hpp"
#include "graykeep/image.hpp"
#include "graykeep/schemes.hpp"

namespace graykeep {

// Marked-image wire format (bit-exact, see README): the LSBs of the first
// ceil(H/3) row-0 pixels hold, big-endian field by field and packed in
// (R, G, B) channel order left to right,
//   T1(8) | T2(8) | K_end(w) | L_clm(w) | ECB_last(1) | SLM(L_clm)
// with w = unit_index_bits(width, height) and H the total bit count above.
// The displaced LSBs are prepended to the secret payload before embedding.

struct EncodeParams {
  Scheme scheme = Scheme::kProposed;
  int t1 = 0;
  int t2 = 0;
  bool collect_units = false;  // fill EncodeReport::units
};

struct UnitRecord {
  uint32_t index = 0;
  uint16_t row = 0, col = 0;
  RegionClass region = RegionClass::kComplex;
  bool skipped = false;    // location-map skip
  uint8_t bits_in_r = 0;
  uint8_t ecb_in = 0;      // bit carried in this unit's blue channel
  uint8_t ecb_out = 0;     // bit this unit hands to the next embedding unit
  double ued = 0.0;
};

struct EncodeReport {
  Scheme scheme = Scheme::kProposed;
  int t1 = 0, t2 = 0;
  uint32_t k_end = 0;
  uint32_t header_bits = 0;
  uint32_t header_pixels = 0;
  uint32_t l_clm = 0;
  uint32_t lm_ones = 0;
  uint32_t fit_skips = 0;
  uint64_t secret_bits = 0;
  uint64_t payload_bits = 0;  // secret plus displaced header LSBs
  uint32_t embedding_units = 0;
  uint32_t two_bit_units = 0;
  // Smooth two-bit units whose second-level prediction ended up farther from
  // the intermediate value than the first-level one. Zero by construction.
  uint32_t clamp_violations = 0;
  double mse = 0.0;
  double psnr_db = 0.0;
  uint32_t gray_changed_pixels = 0;
  std::vector<UnitRecord> units;
};

/// Embeds `secret` into `cover` and returns the marked image. Deterministic:
/// identical inputs give a byte-identical result. Throws CapacityError when
/// the payload or the header does not fit, CodecError/IoError on invalid
/// input images.
ColorImage encode(const ColorImage& cover, const BitVec& secret,
                  const EncodeParams& params, EncodeReport* report = nullptr);

struct DecodeResult {
  ColorImage cover;
  BitVec secret;
  int t1 = 0, t2 = 0;  // thresholds read back from the header
};

/// Recovers the exact cover image and secret bits from a marked image
/// produced by encode with the same scheme.
DecodeResult decode(const ColorImage& marked, Scheme scheme);

struct ThresholdChoice {
  int t1 = 0;
  int t2 = 0;
};

/// Deterministic threshold search: T2 sweeps {1, 2, 4, ..., 128, 255}, T1
/// sweeps 0..T2; among pairs whose worst-case capacity covers secret_bits
/// plus header overhead, picks the one with the smallest estimated
/// distortion (ties toward smaller T2, then smaller T1). The Hou scheme has
/// no classifier, so it always gets {255, 255}.
ThresholdChoice select_thresholds(const ColorImage& cover, Scheme scheme,
                                  uint64_t secret_bits);

}  // namespace graykeep
