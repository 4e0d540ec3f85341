#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "graykeep/intmath.hpp"

namespace graykeep {

enum Channel : int { kRed = 0, kGreen = 1, kBlue = 2 };

/// 8-bit RGB image stored as three planar channels, row-major.
/// Immutable once built as far as the codec is concerned; encode/decode work
/// on private copies.
struct ColorImage {
  int width = 0;   // columns
  int height = 0;  // rows
  std::array<std::vector<uint8_t>, 3> plane;  // indexed by Channel

  ColorImage() = default;
  ColorImage(int w, int h) : width(w), height(h) {
    for (auto& p : plane) p.assign(static_cast<size_t>(w) * h, 0);
  }

  size_t idx(int i, int j) const { return static_cast<size_t>(i) * width + j; }
  uint8_t at(Channel c, int i, int j) const { return plane[c][idx(i, j)]; }
  void set(Channel c, int i, int j, uint8_t v) { plane[c][idx(i, j)] = v; }

  bool same_size(const ColorImage& o) const {
    return width == o.width && height == o.height;
  }
  bool operator==(const ColorImage& o) const {
    return width == o.width && height == o.height && plane == o.plane;
  }
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> v;

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h), v(static_cast<size_t>(w) * h, 0) {}

  uint8_t at(int i, int j) const { return v[static_cast<size_t>(i) * width + j]; }
  void set(int i, int j, uint8_t g) { v[static_cast<size_t>(i) * width + j] = g; }

  bool operator==(const GrayImage& o) const {
    return width == o.width && height == o.height && v == o.v;
  }
};

/// BT.601 luma of one pixel: round(0.299 r + 0.587 g + 0.114 b), nearest
/// integer with halves rounded away from zero. Integer-exact.
inline int gray_of(int r, int g, int b) {
  return static_cast<int>((299 * r + 587 * g + 114 * b + 500) / 1000);
}

GrayImage to_gray(const ColorImage& img);

/// Grayscale used for region classification: identical to to_gray except
/// that row 0 has its pixel LSBs cleared first. Row 0 carries the embedded
/// header, so its plain grayscale differs between cover and marked image;
/// masking the LSBs makes this function return the same values for both,
/// which is what lets the decoder reproduce the encoder's classification.
GrayImage classification_gray(const ColorImage& img);

/// ceil(log2(width*height)); field width of the unit-index and map-length
/// header entries.
int unit_index_bits(int width, int height);

/// The embeddable area: rows [1, height-3], cols [1, width-3], scanned
/// row-major. Every unit inside has its full 9-sample causal context and all
/// four classification neighbours in bounds, and row 0 stays free for the
/// header.
struct TraversalRegion {
  int width = 0;
  int height = 0;

  TraversalRegion() = default;
  TraversalRegion(int w, int h) : width(w), height(h) {}

  int rows() const { return height - 3; }
  int cols() const { return width - 3; }
  uint32_t unit_count() const {
    return static_cast<uint32_t>(rows()) * static_cast<uint32_t>(cols());
  }
  int row_of(uint32_t k) const { return 1 + static_cast<int>(k) / cols(); }
  int col_of(uint32_t k) const { return 1 + static_cast<int>(k) % cols(); }
  bool contains(int i, int j) const {
    return i >= 1 && i <= height - 3 && j >= 1 && j <= width - 3;
  }
};

}  // namespace graykeep
