#include "graykeep/bits.hpp"

#include <cstdio>
#include <memory>

#include "graykeep/errors.hpp"

namespace graykeep {

BitVec BitVec::from_bytes(const std::vector<uint8_t>& bytes, size_t nbits) {
  if (nbits > bytes.size() * 8)
    throw IoError("bit count exceeds available bytes");
  BitVec v;
  v.bytes_ = bytes;
  v.bytes_.resize((nbits + 7) / 8);
  v.nbits_ = nbits;
  // Clear any slack bits in the final byte so equality stays well defined.
  if (nbits % 8 != 0 && !v.bytes_.empty())
    v.bytes_.back() &= static_cast<uint8_t>(0xFF00u >> (nbits % 8));
  return v;
}

bool BitCursor::read_bit() {
  if (pos_ >= v_->size()) throw CodecError("bit stream exhausted");
  return (*v_)[pos_++];
}

uint64_t BitCursor::read_uint(int width) {
  uint64_t value = 0;
  for (int k = 0; k < width; ++k) value = (value << 1) | (read_bit() ? 1u : 0u);
  return value;
}

BitVec random_bits(size_t n, uint64_t seed) {
  Xorshift64Star rng(seed);
  BitVec v;
  for (size_t i = 0; i < n; ++i) v.push_back(rng.next_bit());
  return v;
}

void write_payload_file(const std::string& path, const BitVec& bits) {
  std::unique_ptr<FILE, int (*)(FILE*)> f(fopen(path.c_str(), "wb"), fclose);
  if (!f) throw IoError("cannot open for writing: " + path);
  uint64_t n = bits.size();
  uint8_t hdr[8];
  for (int i = 0; i < 8; ++i) hdr[i] = static_cast<uint8_t>(n >> (8 * i));
  if (fwrite(hdr, 1, 8, f.get()) != 8)
    throw IoError("short write: " + path);
  const auto& data = bits.bytes();
  if (!data.empty() && fwrite(data.data(), 1, data.size(), f.get()) != data.size())
    throw IoError("short write: " + path);
}

BitVec read_payload_file(const std::string& path) {
  std::unique_ptr<FILE, int (*)(FILE*)> f(fopen(path.c_str(), "rb"), fclose);
  if (!f) throw IoError("cannot open: " + path);
  uint8_t hdr[8];
  if (fread(hdr, 1, 8, f.get()) != 8)
    throw IoError("truncated payload file: " + path);
  uint64_t n = 0;
  for (int i = 7; i >= 0; --i) n = (n << 8) | hdr[i];
  std::vector<uint8_t> data((n + 7) / 8);
  if (!data.empty() && fread(data.data(), 1, data.size(), f.get()) != data.size())
    throw IoError("truncated payload file: " + path);
  return BitVec::from_bytes(data, n);
}

}  // namespace graykeep
