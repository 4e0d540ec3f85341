#include "graykeep/locmap.hpp"

#include "graykeep/errors.hpp"

namespace graykeep {

namespace {

// 32-bit renormalizing arithmetic coder, binary alphabet, adaptive Laplace
// counts. Encoder and decoder renormalize in lockstep, so the bit stream is
// identical on every platform.
constexpr uint64_t kTop = 0xFFFFFFFFull;
constexpr uint64_t kHalf = 0x80000000ull;
constexpr uint64_t kQuarter = 0x40000000ull;
constexpr uint64_t kThreeQuarter = 0xC0000000ull;
constexpr uint64_t kCountLimit = 1ull << 16;

struct Counts {
  uint64_t c0 = 1;
  uint64_t c1 = 1;

  void update(bool bit) {
    (bit ? c1 : c0)++;
    if (c0 + c1 >= kCountLimit) {
      c0 = (c0 + 1) >> 1;
      c1 = (c1 + 1) >> 1;
    }
  }
};

class Encoder {
 public:
  void encode(bool bit) {
    const uint64_t range = high_ - low_ + 1;
    const uint64_t split = range * counts_.c0 / (counts_.c0 + counts_.c1);
    if (bit)
      low_ += split;
    else
      high_ = low_ + split - 1;
    for (;;) {
      if (high_ < kHalf) {
        emit(false);
      } else if (low_ >= kHalf) {
        emit(true);
        low_ -= kHalf;
        high_ -= kHalf;
      } else if (low_ >= kQuarter && high_ < kThreeQuarter) {
        ++pending_;
        low_ -= kQuarter;
        high_ -= kQuarter;
      } else {
        break;
      }
      low_ <<= 1;
      high_ = (high_ << 1) | 1;
    }
    counts_.update(bit);
  }

  BitVec finish() {
    ++pending_;
    emit(low_ >= kQuarter);
    return std::move(out_);
  }

 private:
  void emit(bool bit) {
    out_.push_back(bit);
    for (; pending_ > 0; --pending_) out_.push_back(!bit);
  }

  uint64_t low_ = 0;
  uint64_t high_ = kTop;
  uint64_t pending_ = 0;
  Counts counts_;
  BitVec out_;
};

class Decoder {
 public:
  explicit Decoder(const BitVec& stream, size_t start)
      : stream_(&stream), pos_(start) {
    for (int i = 0; i < 32; ++i) code_ = (code_ << 1) | next_input_bit();
  }

  bool decode() {
    const uint64_t range = high_ - low_ + 1;
    const uint64_t split = range * counts_.c0 / (counts_.c0 + counts_.c1);
    const bool bit = (code_ - low_) >= split;
    if (bit)
      low_ += split;
    else
      high_ = low_ + split - 1;
    for (;;) {
      if (high_ < kHalf) {
      } else if (low_ >= kHalf) {
        code_ -= kHalf;
        low_ -= kHalf;
        high_ -= kHalf;
      } else if (low_ >= kQuarter && high_ < kThreeQuarter) {
        code_ -= kQuarter;
        low_ -= kQuarter;
        high_ -= kQuarter;
      } else {
        break;
      }
      low_ <<= 1;
      high_ = (high_ << 1) | 1;
      code_ = (code_ << 1) | next_input_bit();
    }
    counts_.update(bit);
    return bit;
  }

 private:
  // Reads past the stream end as zeros; the coder tail relies on it.
  uint64_t next_input_bit() {
    if (pos_ >= stream_->size()) return 0;
    return (*stream_)[pos_++] ? 1 : 0;
  }

  const BitVec* stream_;
  size_t pos_;
  uint64_t low_ = 0;
  uint64_t high_ = kTop;
  uint64_t code_ = 0;
  Counts counts_;
};

}  // namespace

BitVec compress_location_map(const LocationMap& map) {
  Encoder enc;
  for (size_t i = 0; i < map.size(); ++i) enc.encode(map[i]);
  BitVec coded = enc.finish();

  BitVec out;
  if (coded.size() > map.size()) {
    // Coding would expand; store raw. Keeps the worst case at n + 1 bits.
    out.push_back(true);
    out.append(map);
  } else {
    out.push_back(false);
    out.append(coded);
  }
  return out;
}

LocationMap decompress_location_map(const BitVec& stream, size_t n) {
  if (stream.empty()) {
    if (n == 0) return LocationMap{};
    throw CodecError("location map stream empty");
  }
  LocationMap map;
  if (stream[0]) {
    if (stream.size() < n + 1)
      throw CodecError("location map stream shorter than declared length");
    for (size_t i = 0; i < n; ++i) map.push_back(stream[1 + i]);
    return map;
  }
  Decoder dec(stream, 1);
  for (size_t i = 0; i < n; ++i) map.push_back(dec.decode());
  return map;
}

}  // namespace graykeep
