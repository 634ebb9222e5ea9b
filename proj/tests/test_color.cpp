#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wmark/color.hpp"

using namespace wmark;

namespace {

Raster single_pixel(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  Raster img(1, 1);
  img.at(0, 0, 0) = r;
  img.at(0, 0, 1) = g;
  img.at(0, 0, 2) = b;
  return img;
}

}  // namespace

TEST_CASE("primary colors hit the expected YCbCr values") {
  auto p = rgb_to_ycbcr(single_pixel(255, 0, 0));
  CHECK(p.plane0.at(0, 0) == doctest::Approx(76.245).epsilon(1e-9));
  CHECK(p.plane1.at(0, 0) == doctest::Approx(84.97232).epsilon(1e-9));
  CHECK(p.plane2.at(0, 0) == doctest::Approx(255.5).epsilon(1e-9));

  p = rgb_to_ycbcr(single_pixel(255, 255, 255));
  CHECK(p.plane0.at(0, 0) == doctest::Approx(255.0).epsilon(1e-9));
  CHECK(p.plane1.at(0, 0) == doctest::Approx(128.0).epsilon(1e-6));
  CHECK(p.plane2.at(0, 0) == doctest::Approx(128.0).epsilon(1e-6));

  p = rgb_to_ycbcr(single_pixel(0, 0, 0));
  CHECK(p.plane0.at(0, 0) == doctest::Approx(0.0));
  CHECK(p.plane1.at(0, 0) == doctest::Approx(128.0));
  CHECK(p.plane2.at(0, 0) == doctest::Approx(128.0));
}

TEST_CASE("every 8-bit gray and a dense random sample round trip exactly") {
  Raster img(256, 1);
  for (int x = 0; x < 256; ++x)
    for (int c = 0; c < 3; ++c) img.at(0, x, c) = std::uint8_t(x);
  Raster back = ycbcr_to_rgb(rgb_to_ycbcr(img));
  CHECK(back.data == img.data);

  std::mt19937 rng(7);
  Raster rnd(64, 64);
  for (auto& v : rnd.data) v = std::uint8_t(rng());
  back = ycbcr_to_rgb(rgb_to_ycbcr(rnd));
  CHECK(back.data == rnd.data);
}

TEST_CASE("small plane perturbations survive requantization") {
  std::mt19937 rng(11);
  Raster img(32, 32);
  for (auto& v : img.data) v = std::uint8_t(rng());
  PlaneSet p = rgb_to_ycbcr(img);
  // Forward/inverse matrix error is ~1e-4; a perturbation below 0.4 must not
  // flip any rounded sample because the round-trip slack is under half an LSB.
  std::uniform_real_distribution<double> d(-0.3, 0.3);
  for (auto& v : p.plane0.v) v += d(rng);
  Raster back = ycbcr_to_rgb(p);
  for (std::size_t i = 0; i < img.data.size(); ++i)
    CHECK(std::abs(int(back.data[i]) - int(img.data[i])) <= 1);
}

TEST_CASE("quantize_sample rounds half away from zero and clamps") {
  CHECK(quantize_sample(0.5) == 1);
  CHECK(quantize_sample(1.49) == 1);
  CHECK(quantize_sample(1.5) == 2);
  CHECK(quantize_sample(-0.4) == 0);
  CHECK(quantize_sample(-3.0) == 0);
  CHECK(quantize_sample(254.5) == 255);
  CHECK(quantize_sample(300.0) == 255);
}

TEST_CASE("rgb plane mode is a pure widening/narrowing pair") {
  std::mt19937 rng(3);
  Raster img(16, 16);
  for (auto& v : img.data) v = std::uint8_t(rng());
  PlaneSet p = rgb_to_planes(img);
  CHECK(p.mode == ColorMode::RGB);
  CHECK(p.plane1.at(2, 3) == double(img.at(2, 3, 1)));
  Raster back = planes_to_rgb(p);
  CHECK(back.data == img.data);
}
