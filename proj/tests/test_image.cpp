#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "fixtures.hpp"
#include "graykeep/errors.hpp"
#include "graykeep/image.hpp"
#include "graykeep/image_io.hpp"

using namespace graykeep;

TEST_CASE("gray_of matches the weighted rounding rule") {
  CHECK(gray_of(0, 0, 0) == 0);
  CHECK(gray_of(255, 255, 255) == 255);
  // 0.299*103 + 0.587*86 + 0.114*96 = 92.223
  CHECK(gray_of(103, 86, 96) == 92);

  // exact half: 0.114 * 250 = 28.5 rounds away from zero to 29
  CHECK(gray_of(0, 0, 250) == 29);

  // cross-check the integer form against direct evaluation away from the
  // rounding boundary, where the double route is unambiguous
  Xorshift64Star rng(31);
  for (int t = 0; t < 20000; ++t) {
    const int r = static_cast<int>(rng.next_below(256));
    const int g = static_cast<int>(rng.next_below(256));
    const int b = static_cast<int>(rng.next_below(256));
    const double exact = 0.299 * r + 0.587 * g + 0.114 * b;
    const double frac = exact - std::floor(exact);
    if (std::abs(frac - 0.5) < 1e-6) continue;
    const int want = static_cast<int>(std::floor(exact + 0.5));
    CHECK(gray_of(r, g, b) == want);
  }
}

TEST_CASE("to_gray is pure and pixelwise") {
  ColorImage img(9, 8);
  img.set(kRed, 3, 4, 103);
  img.set(kGreen, 3, 4, 86);
  img.set(kBlue, 3, 4, 96);
  const GrayImage g = to_gray(img);
  CHECK(g.at(3, 4) == 92);
  CHECK(g.at(0, 0) == 0);
  CHECK(to_gray(img) == g);
}

TEST_CASE("classification_gray ignores row-0 LSBs") {
  ColorImage a(12, 10);
  ColorImage b(12, 10);
  for (int j = 0; j < 12; ++j) {
    // differ only in LSBs; (1,1,1) rounds to gray 1 but (1,0,1) to 0
    a.set(kRed, 0, j, 1);
    b.set(kRed, 0, j, 1);
    a.set(kGreen, 0, j, 1);
    b.set(kGreen, 0, j, 0);
    a.set(kBlue, 0, j, 1);
    b.set(kBlue, 0, j, 0);
  }
  a.set(kRed, 5, 5, 77);
  b.set(kRed, 5, 5, 77);
  CHECK(classification_gray(a) == classification_gray(b));
  CHECK(to_gray(a).at(0, 3) != to_gray(b).at(0, 3));
}

TEST_CASE("unit_index_bits") {
  CHECK(unit_index_bits(512, 512) == 18);
  CHECK(unit_index_bits(2, 2) == 2);
  CHECK(unit_index_bits(512, 256) == 17);
  CHECK(unit_index_bits(64, 64) == 12);
}

TEST_CASE("traversal region geometry") {
  const TraversalRegion region(8, 8);
  CHECK(region.rows() == 5);
  CHECK(region.cols() == 5);
  CHECK(region.unit_count() == 25);
  CHECK(region.row_of(0) == 1);
  CHECK(region.col_of(0) == 1);
  CHECK(region.row_of(24) == 5);
  CHECK(region.col_of(24) == 5);
  CHECK_FALSE(region.contains(0, 3));
  CHECK_FALSE(region.contains(3, 0));
  CHECK_FALSE(region.contains(6, 3));
  CHECK_FALSE(region.contains(3, 6));
  CHECK(region.contains(1, 1));
  CHECK(region.contains(5, 5));

  // every unit has its context and classification neighbours in bounds
  for (int w = 8; w <= 11; ++w) {
    for (int h = 8; h <= 11; ++h) {
      const TraversalRegion r(w, h);
      for (uint32_t k = 0; k < r.unit_count(); ++k) {
        const int i = r.row_of(k), j = r.col_of(k);
        CHECK(i - 1 >= 0);      // classification north
        CHECK(i + 2 <= h - 1);  // ss row
        CHECK(j - 1 >= 0);      // sw / ssw
        CHECK(j + 2 <= w - 1);  // ee / see
        CHECK(i >= 1);          // row 0 reserved
      }
    }
  }
}

TEST_CASE("ppm save/load round-trip") {
  using graykeep::testing::FixtureSpec;
  FixtureSpec spec;
  spec.width = 37;  // odd size to exercise header parsing
  spec.height = 23;
  spec.seed = 5;
  const ColorImage img = graykeep::testing::make_fixture(spec);
  const std::string path = "/tmp/graykeep_io_test.ppm";
  save_image(img, path);
  CHECK(load_image(path) == img);
  remove(path.c_str());
}

TEST_CASE("ppm rejects wrong formats") {
  const std::string gray_path = "/tmp/graykeep_io_gray.pgm";
  FILE* f = fopen(gray_path.c_str(), "wb");
  REQUIRE(f);
  fprintf(f, "P5\n4 4\n255\n");
  for (int i = 0; i < 16; ++i) fputc(i, f);
  fclose(f);
  CHECK_THROWS_WITH_AS(load_image(gray_path), doctest::Contains("not RGB"),
                       IoError);
  remove(gray_path.c_str());

  const std::string deep_path = "/tmp/graykeep_io_deep.ppm";
  f = fopen(deep_path.c_str(), "wb");
  REQUIRE(f);
  fprintf(f, "P6\n2 2\n65535\n");
  for (int i = 0; i < 24; ++i) fputc(0, f);
  fclose(f);
  CHECK_THROWS_WITH_AS(load_image(deep_path), doctest::Contains("non-8-bit"),
                       IoError);
  remove(deep_path.c_str());

  const std::string short_path = "/tmp/graykeep_io_short.ppm";
  f = fopen(short_path.c_str(), "wb");
  REQUIRE(f);
  fprintf(f, "P6\n8 8\n255\n");
  for (int i = 0; i < 30; ++i) fputc(1, f);
  fclose(f);
  CHECK_THROWS_WITH_AS(load_image(short_path), doctest::Contains("truncated"),
                       IoError);
  remove(short_path.c_str());

  CHECK_THROWS_AS(load_image("/tmp/graykeep_does_not_exist.ppm"), IoError);
}

#ifdef GRAYKEEP_TEST_PNG
TEST_CASE("png save/load round-trip") {
  graykeep::testing::FixtureSpec spec;
  spec.width = 33;
  spec.height = 20;
  spec.seed = 9;
  const ColorImage img = graykeep::testing::make_fixture(spec);
  const std::string path = "/tmp/graykeep_io_test.png";
  save_image(img, path);
  CHECK(load_image(path) == img);
  remove(path.c_str());
}
#endif
