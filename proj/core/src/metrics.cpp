#include "wmark/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace wmark {

namespace {

template <typename GetA, typename GetB>
double mse_impl(std::size_t n, GetA&& get_a, GetB&& get_b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = get_a(i) - get_b(i);
    acc += d * d;
  }
  return acc / static_cast<double>(n);
}

double pearson(const double* a, const double* b, std::size_t n) {
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 && sbb == 0.0) throw spec_error("correlation undefined: both inputs constant");
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

double mse(const Raster& a, const Raster& b) {
  if (!a.same_shape(b)) throw size_error("mse: shape mismatch");
  return mse_impl(a.data.size(), [&](std::size_t i) { return double(a.data[i]); },
                  [&](std::size_t i) { return double(b.data[i]); });
}

double mse(const Plane& a, const Plane& b) {
  if (!a.same_shape(b)) throw size_error("mse: shape mismatch");
  return mse_impl(a.v.size(), [&](std::size_t i) { return a.v[i]; },
                  [&](std::size_t i) { return b.v[i]; });
}

double psnr(const Raster& a, const Raster& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

double psnr(const Plane& a, const Plane& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / m);
}

double corr(const Raster& a, const Raster& b) {
  if (!a.same_shape(b)) throw size_error("corr: shape mismatch");
  std::vector<double> fa(a.data.begin(), a.data.end());
  std::vector<double> fb(b.data.begin(), b.data.end());
  return pearson(fa.data(), fb.data(), fa.size());
}

double corr(const Plane& a, const Plane& b) {
  if (!a.same_shape(b)) throw size_error("corr: shape mismatch");
  return pearson(a.v.data(), b.v.data(), a.v.size());
}

namespace {

double nc_numerator(const WatermarkBits& w, const WatermarkBits& w_rec, double* sum_w2) {
  if (w.rows != w_rec.rows || w.cols != w_rec.cols) throw size_error("nc: shape mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < w.bits.size(); ++i) {
    num += double(w.bits[i]) * double(w_rec.bits[i]);
    den += double(w.bits[i]) * double(w.bits[i]);
  }
  if (den == 0.0) throw spec_error("nc undefined: watermark is all zero");
  *sum_w2 = den;
  return num;
}

}  // namespace

double nc(const WatermarkBits& w, const WatermarkBits& w_rec) {
  double den = 0.0;
  const double num = nc_numerator(w, w_rec, &den);
  return num / den;
}

double nc_paper(const WatermarkBits& w, const WatermarkBits& w_rec) {
  double den = 0.0;
  const double num = nc_numerator(w, w_rec, &den);
  return num / std::sqrt(den);
}

double error_rate(int embedded_count, int correctly_recovered) {
  if (embedded_count <= 0) throw spec_error("error_rate undefined: nothing embedded");
  return 100.0 * double(embedded_count - correctly_recovered) / double(embedded_count);
}

std::string QualityReport::csv_header() {
  return "mse,psnr_db,corr,nc,error_rate_percent";
}

std::string QualityReport::csv_row() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.6f,%.4f,%.6f,%.4f,%.4f", mse, psnr, corr, nc,
                error_rate_percent);
  return buf;
}

}  // namespace wmark
