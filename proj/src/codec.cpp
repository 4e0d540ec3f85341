#include "graykeep/codec.hpp"

#include <array>
#include <cstdlib>

#include "graykeep/errors.hpp"
#include "graykeep/expand.hpp"
#include "graykeep/green.hpp"
#include "graykeep/locmap.hpp"
#include "graykeep/metrics.hpp"
#include "graykeep/predictors.hpp"

namespace graykeep {

namespace {

constexpr int kFixedHeaderBits = 25;  // T1(8) + T2(8) + ECB_last(1)

int lsb_slot(const ColorImage& img, int t) {
  return img.at(static_cast<Channel>(t % 3), 0, t / 3) & 1;
}

void set_lsb_slot(ColorImage& img, int t, int bit) {
  const Channel c = static_cast<Channel>(t % 3);
  const int j = t / 3;
  const uint8_t v = img.at(c, 0, j);
  img.set(c, 0, j, static_cast<uint8_t>((v & ~1) | bit));
}

/// Predictor values for the unit at (i, j), computed from whatever the
/// channel planes currently hold. During encoding that is always the cover
/// (contexts lie strictly ahead in scan order); during decoding the reverse
/// scan has already restored them.
UnitPredictions unit_predictions_at(const ColorImage& img,
                                    const GrayImage& gray, Scheme scheme,
                                    int i, int j) {
  UnitPredictions p;
  if (scheme == Scheme::kHou) {
    const std::array<int, 3> grn = {gray.at(i + 1, j), gray.at(i, j + 1),
                                    gray.at(i + 1, j + 1)};
    const std::array<int, 3> kr = {img.at(kRed, i + 1, j), img.at(kRed, i, j + 1),
                                   img.at(kRed, i + 1, j + 1)};
    const std::array<int, 3> kb = {img.at(kBlue, i + 1, j), img.at(kBlue, i, j + 1),
                                   img.at(kBlue, i + 1, j + 1)};
    const int gr_here = gray.at(i, j);
    p.poly_red = poly_predict(grn, kr, gr_here);
    p.poly_blue = poly_predict(grn, kb, gr_here);
  } else {
    p.red = PredictionPair::from_context(
        Context9::at(img.plane[kRed], img.width, i, j));
    p.blue = PredictionPair::from_context(
        Context9::at(img.plane[kBlue], img.width, i, j));
  }
  return p;
}

struct UnitBase {
  uint8_t r = 0, g = 0, b = 0;
  uint8_t gr = 0;
  uint8_t delta_v = 0;
  UnitPredictions preds;
};

std::vector<UnitBase> precompute_units(const ColorImage& img, Scheme scheme) {
  const TraversalRegion region(img.width, img.height);
  const GrayImage gray = to_gray(img);
  const GrayImage cgray = classification_gray(img);
  std::vector<UnitBase> units(region.unit_count());
  for (uint32_t k = 0; k < region.unit_count(); ++k) {
    const int i = region.row_of(k);
    const int j = region.col_of(k);
    UnitBase& u = units[k];
    u.r = img.at(kRed, i, j);
    u.g = img.at(kGreen, i, j);
    u.b = img.at(kBlue, i, j);
    u.gr = gray.at(i, j);
    u.delta_v = static_cast<uint8_t>(delta(cgray, i, j));
    u.preds = unit_predictions_at(img, gray, scheme, i, j);
  }
  return units;
}

void check_dimensions(const ColorImage& img) {
  if (img.width < 8 || img.height < 8)
    throw CapacityError("image too small: need at least 8x8");
}

}  // namespace

ColorImage encode(const ColorImage& cover, const BitVec& secret,
                  const EncodeParams& params, EncodeReport* report_out) {
  check_dimensions(cover);
  if (params.t1 < 0 || params.t2 > 255 || params.t1 > params.t2)
    throw std::invalid_argument("thresholds must satisfy 0 <= t1 <= t2 <= 255");

  const Scheme scheme = params.scheme;
  const TraversalRegion region(cover.width, cover.height);
  const uint32_t n = region.unit_count();
  const int w = unit_index_bits(cover.width, cover.height);
  const int row0_slots = 3 * cover.width;

  const std::vector<UnitBase> units = precompute_units(cover, scheme);

  // Classification and the payload-independent overflow map. Complex units
  // are never touched, so they need no safety check.
  std::vector<RegionClass> classes(n, RegionClass::kNormal);
  std::vector<uint8_t> skip(n, 0);  // 1 = location-map skip
  for (uint32_t k = 0; k < n; ++k) {
    const UnitBase& u = units[k];
    if (scheme != Scheme::kHou) {
      classes[k] = classify(u.delta_v, params.t1, params.t2);
      if (classes[k] == RegionClass::kComplex) continue;
    }
    if (!unit_embed_safe(scheme, classes[k], u.r, u.g, u.b, u.gr, u.preds))
      skip[k] = 1;
  }

  auto is_skipped = [&](uint32_t k) {
    return (scheme != Scheme::kHou && classes[k] == RegionClass::kComplex) ||
           skip[k] != 0;
  };

  // Plan until the payload ends exactly at a unit boundary. A payload whose
  // final bit would leave a two-bit unit half filled is undecodable, so such
  // a unit is retired into the location map and the plan rebuilt; the map
  // only ever grows, so this terminates.
  uint32_t fit_skips = 0;
  LocationMap lmap;
  BitVec slm;
  BitVec payload;
  uint32_t header_bits = 0, header_pixels = 0, k_end = 0;
  for (;;) {
    lmap = LocationMap{};
    for (uint32_t k = 0; k < n; ++k)
      lmap.push_back(skip[k] != 0);
    slm = compress_location_map(lmap);
    header_bits = kFixedHeaderBits + 2 * w + static_cast<uint32_t>(slm.size());
    if (header_bits > static_cast<uint32_t>(row0_slots))
      throw CapacityError(
          "auxiliary data does not fit in row 0 (location map too dense or "
          "image too small)");
    header_pixels = (header_bits + 2) / 3;

    payload = BitVec{};
    for (uint32_t t = 0; t < 3 * header_pixels; ++t)
      payload.push_back(lsb_slot(cover, t));
    payload.append(secret);
    const uint64_t total = payload.size();

    uint64_t cursor = 0;
    int64_t ragged_unit = -1;
    bool done = false;
    for (uint32_t k = 0; k < n; ++k) {
      if (is_skipped(k)) continue;
      const UnitBase& u = units[k];
      const uint64_t remaining = total - cursor;
      const int bit0 = payload[cursor];
      const bool have_second = remaining >= 2;
      const int bit1 = have_second ? payload[cursor + 1] : 0;
      const RedEmbed re = embed_unit_red(scheme, classes[k], u.r, u.preds,
                                         bit0, bit1, have_second);
      if (re.ragged) {
        ragged_unit = k;
        break;
      }
      cursor += re.consumed;
      if (cursor >= total) {
        k_end = k;
        done = true;
        break;
      }
    }
    if (ragged_unit >= 0) {
      skip[ragged_unit] = 1;
      ++fit_skips;
      continue;
    }
    if (!done)
      throw CapacityError("payload of " + std::to_string(secret.size()) +
                          " bits exceeds the capacity at these thresholds");
    break;
  }

  // Execute the accepted plan.
  ColorImage marked = cover;
  EncodeReport report;
  report.scheme = scheme;
  report.t1 = params.t1;
  report.t2 = params.t2;
  report.k_end = k_end;
  report.header_bits = header_bits;
  report.header_pixels = header_pixels;
  report.l_clm = static_cast<uint32_t>(slm.size());
  report.fit_skips = fit_skips;
  report.secret_bits = secret.size();
  report.payload_bits = payload.size();
  for (uint32_t k = 0; k < n; ++k)
    if (skip[k]) ++report.lm_ones;

  uint64_t cursor = 0;
  int prev_ecb = 0;
  for (uint32_t k = 0; k <= k_end; ++k) {
    const UnitBase& u = units[k];
    const int i = region.row_of(k);
    const int j = region.col_of(k);
    if (is_skipped(k)) {
      if (params.collect_units) {
        UnitRecord rec;
        rec.index = k;
        rec.row = static_cast<uint16_t>(i);
        rec.col = static_cast<uint16_t>(j);
        rec.region = scheme == Scheme::kHou ? RegionClass::kNormal : classes[k];
        rec.skipped = skip[k] != 0;
        report.units.push_back(rec);
      }
      continue;
    }
    const uint64_t remaining = payload.size() - cursor;
    const int bit0 = payload[cursor];
    const bool have_second = remaining >= 2;
    const int bit1 = have_second ? payload[cursor + 1] : 0;
    const RedEmbed re = embed_unit_red(scheme, classes[k], u.r, u.preds, bit0,
                                       bit1, have_second);
    cursor += re.consumed;

    const int b_marked = embed_unit_blue(scheme, u.b, u.preds, prev_ecb);
    const GreenAdjust ga = adjust_green(u.gr, re.marked, b_marked, u.g);
    if (!ga.feasible)
      throw std::logic_error("planned unit lost green feasibility");
    marked.set(kRed, i, j, static_cast<uint8_t>(re.marked));
    marked.set(kBlue, i, j, static_cast<uint8_t>(b_marked));
    marked.set(kGreen, i, j, static_cast<uint8_t>(ga.g));

    const int ecb_out = compute_ecb(u.gr, u.r, u.b, u.g);
    ++report.embedding_units;
    if (re.consumed == 2) {
      ++report.two_bit_units;
      if (scheme == Scheme::kProposed && classes[k] == RegionClass::kSmooth) {
        const int wm1 = expand_embed(u.r, u.preds.red.p1(), bit0);
        const auto p2 = second_level_predict(u.preds.red, wm1);
        if (p2 && std::abs(wm1 - *p2) > std::abs(wm1 - u.preds.red.p1()))
          ++report.clamp_violations;
      }
    }
    if (params.collect_units) {
      UnitRecord rec;
      rec.index = k;
      rec.row = static_cast<uint16_t>(i);
      rec.col = static_cast<uint16_t>(j);
      rec.region = scheme == Scheme::kHou ? RegionClass::kNormal : classes[k];
      rec.skipped = false;
      rec.bits_in_r = static_cast<uint8_t>(re.consumed);
      rec.ecb_in = static_cast<uint8_t>(prev_ecb);
      rec.ecb_out = static_cast<uint8_t>(ecb_out);
      rec.ued = unit_distortion({u.r, u.g, u.b}, {re.marked, ga.g, b_marked},
                                re.consumed);
      report.units.push_back(rec);
    }
    prev_ecb = ecb_out;
  }
  if (cursor != payload.size())
    throw std::logic_error("embedding did not consume the planned payload");
  const int ecb_last = prev_ecb;

  BitVec header;
  header.append_uint(static_cast<uint64_t>(params.t1), 8);
  header.append_uint(static_cast<uint64_t>(params.t2), 8);
  header.append_uint(k_end, w);
  header.append_uint(slm.size(), w);
  header.push_back(ecb_last != 0);
  header.append(slm);
  for (uint32_t t = 0; t < header.size(); ++t)
    set_lsb_slot(marked, static_cast<int>(t), header[t] ? 1 : 0);

  if (report_out) {
    report.mse = mean_squared_error(cover, marked);
    report.psnr_db = psnr(cover, marked);
    report.gray_changed_pixels =
        static_cast<uint32_t>(invariance_report(cover, marked).count());
    *report_out = std::move(report);
  }
  return marked;
}

DecodeResult decode(const ColorImage& marked, Scheme scheme) {
  if (marked.width < 8 || marked.height < 8)
    throw CodecError("image too small to carry a header");
  const TraversalRegion region(marked.width, marked.height);
  const uint32_t n = region.unit_count();
  const int w = unit_index_bits(marked.width, marked.height);
  const int row0_slots = 3 * marked.width;

  if (kFixedHeaderBits + 2 * w > row0_slots)
    throw CodecError("corrupt header: fixed fields exceed row 0");
  int t = 0;
  auto read_bits = [&](int width) {
    uint64_t v = 0;
    for (int c = 0; c < width; ++c) v = (v << 1) | lsb_slot(marked, t++);
    return v;
  };
  const int t1 = static_cast<int>(read_bits(8));
  const int t2 = static_cast<int>(read_bits(8));
  const uint32_t k_end = static_cast<uint32_t>(read_bits(w));
  const uint32_t l_clm = static_cast<uint32_t>(read_bits(w));
  const int ecb_last = static_cast<int>(read_bits(1));
  if (t1 > t2) throw CodecError("corrupt header: t1 > t2");
  if (k_end >= n) throw CodecError("corrupt header: end index out of range");
  const uint32_t header_bits = kFixedHeaderBits + 2 * w + l_clm;
  if (header_bits > static_cast<uint32_t>(row0_slots))
    throw CodecError("corrupt header: location map does not fit row 0");
  BitVec slm;
  for (uint32_t c = 0; c < l_clm; ++c)
    slm.push_back(lsb_slot(marked, t++) != 0);
  const LocationMap lmap = decompress_location_map(slm, n);
  const uint32_t header_pixels = (header_bits + 2) / 3;

  // Classification matches the encoder exactly: the grayscale is invariant
  // away from row 0 and row 0 enters only LSB-masked.
  const GrayImage gray = to_gray(marked);
  const GrayImage cgray = classification_gray(marked);
  std::vector<RegionClass> classes(n, RegionClass::kNormal);
  if (scheme != Scheme::kHou) {
    for (uint32_t k = 0; k < n; ++k)
      classes[k] = classify(delta(cgray, region.row_of(k), region.col_of(k)),
                            t1, t2);
  }

  ColorImage work = marked;
  int pending_ecb = ecb_last;
  struct Group {
    uint8_t bits[2];
    uint8_t count;
  };
  std::vector<Group> groups;
  groups.reserve(k_end + 1);

  for (int64_t kk = k_end; kk >= 0; --kk) {
    const uint32_t k = static_cast<uint32_t>(kk);
    if (scheme != Scheme::kHou && classes[k] == RegionClass::kComplex) continue;
    if (lmap[k]) continue;
    const int i = region.row_of(k);
    const int j = region.col_of(k);
    const UnitPredictions preds = unit_predictions_at(work, gray, scheme, i, j);
    const auto [ecb_prev, b_orig] =
        extract_unit_blue(scheme, work.at(kBlue, i, j), preds);
    const RedExtract rx =
        extract_unit_red(scheme, classes[k], work.at(kRed, i, j), preds);
    if (b_orig < 0 || b_orig > 255 || rx.orig < 0 || rx.orig > 255)
      throw CodecError("corrupt stream: restored sample out of range");
    const int g_orig = recover_green(gray.at(i, j), rx.orig, b_orig, pending_ecb);
    pending_ecb = ecb_prev;
    work.set(kRed, i, j, static_cast<uint8_t>(rx.orig));
    work.set(kBlue, i, j, static_cast<uint8_t>(b_orig));
    work.set(kGreen, i, j, static_cast<uint8_t>(g_orig));
    Group grp;
    grp.bits[0] = static_cast<uint8_t>(rx.bits[0]);
    grp.bits[1] = static_cast<uint8_t>(rx.bits[1]);
    grp.count = static_cast<uint8_t>(rx.count);
    groups.push_back(grp);
  }
  // The first embedding unit carries a constant 0 in blue.
  if (pending_ecb != 0) throw CodecError("ECB chain inconsistent");

  BitVec payload;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it)
    for (int c = 0; c < it->count; ++c) payload.push_back(it->bits[c]);

  const uint64_t slsb_bits = 3ull * header_pixels;
  if (payload.size() < slsb_bits)
    throw CodecError("corrupt stream: payload shorter than displaced LSBs");
  for (uint32_t s = 0; s < slsb_bits; ++s)
    set_lsb_slot(work, static_cast<int>(s), payload[s] ? 1 : 0);

  DecodeResult result;
  result.t1 = t1;
  result.t2 = t2;
  for (uint64_t s = slsb_bits; s < payload.size(); ++s)
    result.secret.push_back(payload[s]);
  result.cover = std::move(work);
  return result;
}

namespace {

int ceil_log2_ratio(uint64_t num, uint64_t den) {
  int bits = 0;
  while ((den << bits) < num) ++bits;
  return bits;
}

// score = needed * mse16 / capacity; compared by cross multiplication so the
// search stays in exact integers.
struct Score {
  uint64_t needed = 0;
  uint64_t mse16 = 0;
  uint64_t cap2 = 1;
};

bool score_less(const Score& a, const Score& b) {
  const unsigned __int128 lhs =
      static_cast<unsigned __int128>(a.needed) * a.mse16 * b.cap2;
  const unsigned __int128 rhs =
      static_cast<unsigned __int128>(b.needed) * b.mse16 * a.cap2;
  return lhs < rhs;
}

}  // namespace

ThresholdChoice select_thresholds(const ColorImage& cover, Scheme scheme,
                                  uint64_t secret_bits) {
  if (scheme == Scheme::kHou) return {255, 255};
  check_dimensions(cover);
  const TraversalRegion region(cover.width, cover.height);
  const uint32_t n = region.unit_count();
  const int w = unit_index_bits(cover.width, cover.height);
  const std::vector<UnitBase> units = precompute_units(cover, scheme);

  // Per-activity aggregates for the two candidate roles of each unit, so one
  // pass over the image prices every (T1, T2) pair afterwards.
  struct Agg {
    uint64_t s_minbits = 0, s_expbits2 = 0, s_mse16 = 0, s_unsafe = 0;
    uint64_t n_safe = 0, n_mse16 = 0, n_unsafe = 0;
  };
  std::array<Agg, 257> pre{};  // pre[d+1] accumulates delta == d

  for (uint32_t k = 0; k < n; ++k) {
    const UnitBase& u = units[k];
    Agg& a = pre[u.delta_v + 1];
    for (const RegionClass cls : {RegionClass::kSmooth, RegionClass::kNormal}) {
      const bool smooth = cls == RegionClass::kSmooth;
      if (!unit_embed_safe(scheme, cls, u.r, u.g, u.b, u.gr, u.preds)) {
        (smooth ? a.s_unsafe : a.n_unsafe) += 1;
        continue;
      }
      const RedOutcomes ro = red_outcomes(scheme, cls, u.r, u.preds);
      int blue_finals[2];
      for (int ecb = 0; ecb < 2; ++ecb)
        blue_finals[ecb] = embed_unit_blue(scheme, u.b, u.preds, ecb);
      uint64_t mse16 = 0;
      int minbits = 2, wbits = 0;
      for (int p = 0; p < ro.count; ++p) {
        if (ro.bits[p] < minbits) minbits = ro.bits[p];
        wbits += ro.weight8[p] * ro.bits[p];
        for (int ecb = 0; ecb < 2; ++ecb) {
          const int dr = ro.finals[p] - u.r;
          const int db = blue_finals[ecb] - u.b;
          const int dg = adjust_green(u.gr, ro.finals[p], blue_finals[ecb], u.g).g - u.g;
          mse16 += static_cast<uint64_t>(ro.weight8[p]) *
                   (static_cast<uint64_t>(dr * dr) + db * db + dg * dg);
        }
      }
      if (smooth) {
        a.s_minbits += minbits;
        a.s_expbits2 += static_cast<uint64_t>(wbits) / 4;
        a.s_mse16 += mse16;
      } else {
        a.n_safe += 1;
        a.n_mse16 += mse16;
      }
    }
  }
  for (int d = 0; d < 256; ++d) {
    pre[d + 1].s_minbits += pre[d].s_minbits;
    pre[d + 1].s_expbits2 += pre[d].s_expbits2;
    pre[d + 1].s_mse16 += pre[d].s_mse16;
    pre[d + 1].s_unsafe += pre[d].s_unsafe;
    pre[d + 1].n_safe += pre[d].n_safe;
    pre[d + 1].n_mse16 += pre[d].n_mse16;
    pre[d + 1].n_unsafe += pre[d].n_unsafe;
  }

  static constexpr int kT2Grid[] = {1, 2, 4, 8, 16, 32, 64, 128, 255};
  bool have_best = false;
  Score best_score;
  ThresholdChoice best{0, 0};
  for (const int t2 : kT2Grid) {
    for (int t1 = 0; t1 <= t2; ++t1) {
      const Agg& lo = pre[t1 + 1];
      const Agg& hi = pre[t2 + 1];
      const uint64_t cap_min = lo.s_minbits + (hi.n_safe - lo.n_safe);
      const uint64_t cap_exp2 = lo.s_expbits2 + 2 * (hi.n_safe - lo.n_safe);
      const uint64_t mse16 = lo.s_mse16 + (hi.n_mse16 - lo.n_mse16);
      const uint64_t ones = lo.s_unsafe + (hi.n_unsafe - lo.n_unsafe);
      // Upper-ish estimate of the compressed map; the encoder recomputes it
      // exactly, the 64-bit margin below absorbs estimation error and the
      // occasional exact-fit skip.
      uint64_t l_est = 24;
      if (ones > 0)
        l_est = std::min<uint64_t>(n + 1,
                                   24 + ones * (2 + ceil_log2_ratio(n, ones)));
      const uint64_t header_est = kFixedHeaderBits + 2 * w + l_est;
      if (header_est > 3ull * cover.width) continue;
      const uint64_t needed = secret_bits + ((header_est + 2) / 3) * 3 + 64;
      if (cap_min < needed || cap_exp2 == 0) continue;
      const Score score{needed, mse16, cap_exp2};
      if (!have_best || score_less(score, best_score)) {
        have_best = true;
        best_score = score;
        best = {t1, t2};
      }
    }
  }
  if (!have_best)
    throw CapacityError("no thresholds reach the requested capacity of " +
                        std::to_string(secret_bits) + " bits");
  return best;
}

}  // namespace graykeep
