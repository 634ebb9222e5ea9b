#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wmark/metrics.hpp"

using namespace wmark;

namespace {

WatermarkBits make_bits(int rows, int cols, const std::vector<std::uint8_t>& bits) {
  WatermarkBits w;
  w.rows = rows;
  w.cols = cols;
  w.bits = bits;
  return w;
}

double floor2(double x) { return std::floor(x * 100.0) / 100.0; }

}  // namespace

TEST_CASE("mse and psnr golden values") {
  Raster a(4, 4), b(4, 4);
  CHECK(mse(a, b) == doctest::Approx(0.0));
  CHECK(psnr(a, b) == std::numeric_limits<double>::infinity());

  b.data[0] = 4;  // one sample differs by 4 over 48 samples
  CHECK(mse(a, b) == doctest::Approx(16.0 / 48.0));

  for (std::size_t i = 0; i < b.data.size(); ++i) b.data[i] = 1;
  CHECK(mse(a, b) == doctest::Approx(1.0));
  CHECK(psnr(a, b) == doctest::Approx(48.1308036087).epsilon(1e-9));
  CHECK(psnr(a, b) == doctest::Approx(psnr(b, a)));
}

TEST_CASE("pearson correlation basics") {
  Plane a(4, 1), b(4, 1);
  for (int i = 0; i < 4; ++i) {
    a.at(0, i) = i;
    b.at(0, i) = 3.0 * i + 7.0;
  }
  CHECK(corr(a, b) == doctest::Approx(1.0));
  for (int i = 0; i < 4; ++i) b.at(0, i) = -2.0 * i;
  CHECK(corr(a, b) == doctest::Approx(-1.0));
  Plane c(4, 1), d(4, 1);
  CHECK_THROWS_AS(corr(c, d), spec_error);
  CHECK(corr(a, c) == doctest::Approx(0.0));
}

TEST_CASE("nc variants with a hand-counted example") {
  // 75 ones in w, 60 of them also set in w'.
  std::vector<std::uint8_t> w(100, 0), wr(100, 0);
  for (int i = 0; i < 75; ++i) w[i] = 1;
  for (int i = 0; i < 60; ++i) wr[i] = 1;
  WatermarkBits W = make_bits(10, 10, w), R = make_bits(10, 10, wr);
  CHECK(nc(W, R) == doctest::Approx(60.0 / 75.0));
  CHECK(nc_paper(W, R) == doctest::Approx(60.0 / std::sqrt(75.0)));
  CHECK(nc(W, W) == doctest::Approx(1.0));
  CHECK_THROWS_AS(nc(make_bits(10, 10, std::vector<std::uint8_t>(100, 0)), R), spec_error);
  CHECK_THROWS_AS(nc(W, make_bits(5, 5, std::vector<std::uint8_t>(25, 0))), size_error);
}

TEST_CASE("error rate reproduces the published table arithmetic") {
  CHECK(floor2(error_rate(151, 139)) == doctest::Approx(7.94));
  CHECK(floor2(error_rate(126, 121)) == doctest::Approx(3.96));
  CHECK(floor2(error_rate(151, 150)) == doctest::Approx(0.66));
  CHECK(error_rate(100, 100) == doctest::Approx(0.0));
  CHECK(error_rate(100, 0) == doctest::Approx(100.0));
  CHECK_THROWS_AS(error_rate(0, 0), spec_error);
}

TEST_CASE("quality report csv formatting is stable") {
  QualityReport q{1.5, 46.3672, 0.9991, 1.0, 0.0};
  CHECK(QualityReport::csv_header() == "mse,psnr_db,corr,nc,error_rate_percent");
  CHECK(q.csv_row() == "1.500000,46.3672,0.999100,1.0000,0.0000");
}
