#pragma once

#include <utility>

#include "graykeep/classifier.hpp"
#include "graykeep/predictors.hpp"

namespace graykeep {

/// Unit embedding strategy. All three share traversal, header, location map,
/// ECB transport and green adjustment; they differ only in how red-channel
/// bits are placed and which predictor drives each channel.
enum class Scheme { kProposed, kHou, kLi };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const char* name);  // throws on unknown name

/// Per-unit predictor values. red/blue hold the MED+AGSP pair used by the
/// proposed and Li strategies; poly_red/poly_blue hold the quadratic-fit
/// predictions used by the Hou baseline.
struct UnitPredictions {
  PredictionPair red;
  PredictionPair blue;
  int poly_red = 0;
  int poly_blue = 0;
};

struct RedEmbed {
  int marked = 0;
  int consumed = 0;
  bool ragged = false;  // a second bit was required but not available
};

/// Embeds the next payload bit(s) into the red sample. bit0 is always
/// consumed; bit1 only when the strategy places two bits (have_second must
/// then be true, otherwise the unit reports ragged and must be skipped via
/// the location map).
RedEmbed embed_unit_red(Scheme scheme, RegionClass cls, int r_orig,
                        const UnitPredictions& preds, int bit0, int bit1,
                        bool have_second);

struct RedExtract {
  int bits[2] = {0, 0};  // in embed order
  int count = 0;
  int orig = 0;
};

/// Exact inverse of embed_unit_red given the same predictions and class.
RedExtract extract_unit_red(Scheme scheme, RegionClass cls, int r_marked,
                            const UnitPredictions& preds);

/// Blue carries exactly one bit (the previous embedding unit's ECB) via a
/// single-level expansion against the scheme's blue predictor.
int embed_unit_blue(Scheme scheme, int b_orig, const UnitPredictions& preds,
                    int ecb_bit);
std::pair<int, int> extract_unit_blue(Scheme scheme, int b_marked,
                                      const UnitPredictions& preds);

/// Every red value the unit could take across payload-bit combinations,
/// with the probability weight (out of 8) and bit count of each path. At
/// most four distinct paths exist: two one-bit or four two-bit outcomes, or
/// a mix when only one of the two first-level results re-predicts.
struct RedOutcomes {
  int finals[4] = {0, 0, 0, 0};
  int weight8[4] = {0, 0, 0, 0};
  int bits[4] = {0, 0, 0, 0};
  int count = 0;
};

RedOutcomes red_outcomes(Scheme scheme, RegionClass cls, int r_orig,
                         const UnitPredictions& preds);

/// Worst-case overflow/underflow and green-feasibility check over every
/// payload-bit and ECB combination the unit could carry. Deliberately
/// payload-independent so the location map is known before any payload bit
/// is placed.
bool unit_embed_safe(Scheme scheme, RegionClass cls, int r, int g, int b,
                     int gr, const UnitPredictions& preds);

}  // namespace graykeep
