#include "graykeep/image_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstring>
#include <memory>

#include "graykeep/errors.hpp"

#ifdef GRAYKEEP_HAVE_PNG
#include <png.h>
#endif

namespace graykeep {

namespace {

using FilePtr = std::unique_ptr<FILE, int (*)(FILE*)>;

FilePtr open_file(const std::string& path, const char* mode) {
  FilePtr f(fopen(path.c_str(), mode), fclose);
  if (!f) throw IoError("cannot open: " + path);
  return f;
}

bool has_suffix(const std::string& s, const char* suffix) {
  size_t n = strlen(suffix);
  if (s.size() < n) return false;
  for (size_t i = 0; i < n; ++i) {
    if (tolower(static_cast<unsigned char>(s[s.size() - n + i])) != suffix[i])
      return false;
  }
  return true;
}

// One PNM header token, skipping whitespace and '#' comment lines.
int read_pnm_int(FILE* f, const std::string& path) {
  int c = fgetc(f);
  while (c != EOF && (isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = fgetc(f);
    }
    c = fgetc(f);
  }
  if (c == EOF || !isdigit(c)) throw IoError("malformed PPM header: " + path);
  int value = 0;
  while (c != EOF && isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1 << 24) throw IoError("malformed PPM header: " + path);
    c = fgetc(f);
  }
  return value;
}

ColorImage load_ppm(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  char magic[2];
  if (fread(magic, 1, 2, f.get()) != 2) throw IoError("truncated file: " + path);
  if (magic[0] != 'P' || magic[1] != '6') {
    if (magic[0] == 'P' && (magic[1] == '5' || magic[1] == '2'))
      throw IoError("not RGB (grayscale PNM): " + path);
    throw IoError("unsupported format (want binary PPM P6): " + path);
  }
  int w = read_pnm_int(f.get(), path);
  int h = read_pnm_int(f.get(), path);
  int maxval = read_pnm_int(f.get(), path);
  if (maxval != 255) throw IoError("non-8-bit depth (maxval " +
                                   std::to_string(maxval) + "): " + path);
  if (w <= 0 || h <= 0) throw IoError("bad dimensions: " + path);
  // Exactly one whitespace byte separates the header from the raster.
  std::vector<uint8_t> raw(static_cast<size_t>(w) * h * 3);
  if (fread(raw.data(), 1, raw.size(), f.get()) != raw.size())
    throw IoError("truncated file: " + path);

  ColorImage img(w, h);
  for (size_t k = 0; k < static_cast<size_t>(w) * h; ++k) {
    img.plane[kRed][k] = raw[3 * k];
    img.plane[kGreen][k] = raw[3 * k + 1];
    img.plane[kBlue][k] = raw[3 * k + 2];
  }
  return img;
}

void save_ppm(const ColorImage& img, const std::string& path) {
  FilePtr f = open_file(path, "wb");
  fprintf(f.get(), "P6\n%d %d\n255\n", img.width, img.height);
  std::vector<uint8_t> raw(static_cast<size_t>(img.width) * img.height * 3);
  for (size_t k = 0; k < static_cast<size_t>(img.width) * img.height; ++k) {
    raw[3 * k] = img.plane[kRed][k];
    raw[3 * k + 1] = img.plane[kGreen][k];
    raw[3 * k + 2] = img.plane[kBlue][k];
  }
  if (fwrite(raw.data(), 1, raw.size(), f.get()) != raw.size())
    throw IoError("short write: " + path);
}

#ifdef GRAYKEEP_HAVE_PNG

ColorImage load_png(const std::string& path) {
  FilePtr f = open_file(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           nullptr, nullptr);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("libpng init failed");
  }
  std::vector<uint8_t> raw;
  std::vector<png_bytep> rows;
  int w = 0, h = 0;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("malformed PNG: " + path);
  }
  png_init_io(png, f.get());
  png_read_info(png, info);
  w = static_cast<int>(png_get_image_width(png, info));
  h = static_cast<int>(png_get_image_height(png, info));
  int depth = png_get_bit_depth(png, info);
  int color = png_get_color_type(png, info);
  if (depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("non-8-bit depth: " + path);
  }
  if (color != PNG_COLOR_TYPE_RGB) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError(color == PNG_COLOR_TYPE_GRAY
                      ? "not RGB (grayscale PNG): " + path
                      : "unsupported PNG color type (want 8-bit RGB, no alpha): " + path);
  }
  raw.resize(static_cast<size_t>(w) * h * 3);
  rows.resize(h);
  for (int i = 0; i < h; ++i)
    rows[i] = raw.data() + static_cast<size_t>(i) * w * 3;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  ColorImage img(w, h);
  for (size_t k = 0; k < static_cast<size_t>(w) * h; ++k) {
    img.plane[kRed][k] = raw[3 * k];
    img.plane[kGreen][k] = raw[3 * k + 1];
    img.plane[kBlue][k] = raw[3 * k + 2];
  }
  return img;
}

void save_png(const ColorImage& img, const std::string& path) {
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, nullptr);
  if (!png) throw IoError("libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + path);
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<uint8_t> row(static_cast<size_t>(img.width) * 3);
  for (int i = 0; i < img.height; ++i) {
    for (int j = 0; j < img.width; ++j) {
      row[3 * j] = img.at(kRed, i, j);
      row[3 * j + 1] = img.at(kGreen, i, j);
      row[3 * j + 2] = img.at(kBlue, i, j);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

#endif  // GRAYKEEP_HAVE_PNG

}  // namespace

ColorImage load_image(const std::string& path) {
  if (has_suffix(path, ".png")) {
#ifdef GRAYKEEP_HAVE_PNG
    return load_png(path);
#else
    throw IoError("PNG support not built in: " + path);
#endif
  }
  return load_ppm(path);
}

void save_image(const ColorImage& img, const std::string& path) {
  if (has_suffix(path, ".png")) {
#ifdef GRAYKEEP_HAVE_PNG
    save_png(img, path);
    return;
#else
    throw IoError("PNG support not built in: " + path);
#endif
  }
  save_ppm(img, path);
}

}  // namespace graykeep
