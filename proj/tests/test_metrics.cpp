#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "graykeep/metrics.hpp"

using namespace graykeep;

TEST_CASE("psnr of identical images is infinite") {
  const ColorImage img = testing::make_fixture({});
  CHECK(std::isinf(psnr(img, img)));
  CHECK(mean_squared_error(img, img) == 0.0);
}

TEST_CASE("psnr of a single one-step sample difference on 512x512") {
  ColorImage a(512, 512);
  ColorImage b = a;
  b.set(kGreen, 100, 200, 1);
  // independently: 10*log10(255^2 * 512*512*3)
  const double want = 10.0 * std::log10(255.0 * 255.0 * 512 * 512 * 3);
  CHECK(psnr(a, b) == doctest::Approx(want).epsilon(1e-12));
  CHECK(psnr(a, b) == doctest::Approx(107.0871).epsilon(1e-4));
}

TEST_CASE("psnr is symmetric and decreasing in distortion") {
  testing::FixtureSpec spec;
  spec.seed = 77;
  const ColorImage a = testing::make_fixture(spec);
  ColorImage b = a;
  b.set(kRed, 5, 5, static_cast<uint8_t>(a.at(kRed, 5, 5) ^ 3));
  CHECK(psnr(a, b) == psnr(b, a));
  ColorImage c = b;
  c.set(kBlue, 9, 9, static_cast<uint8_t>(a.at(kBlue, 9, 9) ^ 7));
  CHECK(psnr(a, c) < psnr(a, b));
  CHECK(mean_squared_error(a, c) > mean_squared_error(a, b));
}

TEST_CASE("psnr rejects dimension mismatch") {
  CHECK_THROWS(psnr(ColorImage(8, 8), ColorImage(8, 9)));
  CHECK_THROWS(invariance_report(ColorImage(8, 8), ColorImage(9, 8)));
}

TEST_CASE("unit distortion worked values") {
  CHECK(unit_distortion({103, 86, 96}, {104, 86, 93}, 1) == 10.0);
  CHECK(unit_distortion({103, 86, 96}, {105, 86, 93}, 2) == 6.5);
  CHECK(unit_distortion({103, 86, 96}, {104, 86, 93}, 2) == 5.0);
  CHECK(unit_distortion({50, 60, 70}, {50, 60, 70}, 1) == 0.0);
  CHECK(unit_distortion({50, 60, 70}, {50, 60, 70}, 2) == 0.0);
}

TEST_CASE("invariance report flags exactly the gray-changed pixels") {
  testing::FixtureSpec spec;
  spec.seed = 78;
  const ColorImage a = testing::make_fixture(spec);
  CHECK(invariance_report(a, a).count() == 0);

  ColorImage b = a;
  // moving green by +-2 always moves the rounded gray
  b.set(kGreen, 0, 3, static_cast<uint8_t>(a.at(kGreen, 0, 3) > 128
                                               ? a.at(kGreen, 0, 3) - 2
                                               : a.at(kGreen, 0, 3) + 2));
  b.set(kGreen, 5, 7, static_cast<uint8_t>(a.at(kGreen, 5, 7) > 128
                                               ? a.at(kGreen, 5, 7) - 2
                                               : a.at(kGreen, 5, 7) + 2));
  const InvarianceReport rep = invariance_report(a, b);
  REQUIRE(rep.count() == 2);
  CHECK(rep.changed[0] == std::pair{0, 3});
  CHECK(rep.changed[1] == std::pair{5, 7});
  CHECK_FALSE(rep.all_in_row0());
}
