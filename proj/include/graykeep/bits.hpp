#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace graykeep {

/// Growable bit string. Bits are packed MSB-first within each byte, so the
/// byte view matches the on-disk payload format directly.
class BitVec {
 public:
  BitVec() = default;

  void push_back(bool bit) {
    if (nbits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_[nbits_ / 8] |= static_cast<uint8_t>(0x80u >> (nbits_ % 8));
    ++nbits_;
  }

  bool operator[](size_t i) const {
    return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
  }

  size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  void append(const BitVec& other) {
    for (size_t i = 0; i < other.size(); ++i) push_back(other[i]);
  }

  /// Append `width` bits of `value`, most significant bit first.
  void append_uint(uint64_t value, int width) {
    for (int k = width - 1; k >= 0; --k) push_back((value >> k) & 1u);
  }

  const std::vector<uint8_t>& bytes() const { return bytes_; }

  static BitVec from_bytes(const std::vector<uint8_t>& bytes, size_t nbits);

  bool operator==(const BitVec& other) const {
    if (nbits_ != other.nbits_) return false;
    for (size_t i = 0; i < nbits_; ++i)
      if ((*this)[i] != other[i]) return false;
    return true;
  }

 private:
  std::vector<uint8_t> bytes_;
  size_t nbits_ = 0;
};

/// Sequential reader over a BitVec with bounds checking.
class BitCursor {
 public:
  explicit BitCursor(const BitVec& v) : v_(&v) {}

  bool read_bit();
  uint64_t read_uint(int width);
  size_t remaining() const { return v_->size() - pos_; }
  size_t pos() const { return pos_; }

 private:
  const BitVec* v_;
  size_t pos_ = 0;
};

/// xorshift64* generator with the standard (12, 25, 27) shifts and the
/// 0x2545F4914F6CDD1D multiplier. Used wherever reproducible pseudo-random
/// data is needed; see README for the exact bit-extraction rule.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(uint64_t seed)
      : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  uint64_t next() {
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1Dull;
  }

  /// Top bit of the next output word.
  bool next_bit() { return (next() >> 63) & 1u; }

  /// Uniform value in [0, n) by multiply-shift on the high word.
  uint64_t next_below(uint64_t n) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  uint64_t state_;
};

/// N pseudo-random bits from a seeded xorshift64* stream.
BitVec random_bits(size_t n, uint64_t seed);

/// Payload container file: 8-byte little-endian bit count, then the packed
/// bits MSB-first. Pinned so independently produced files compare byte-equal.
void write_payload_file(const std::string& path, const BitVec& bits);
BitVec read_payload_file(const std::string& path);

}  // namespace graykeep
