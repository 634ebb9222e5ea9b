#pragma once

#include <limits>
#include <string>

#include "wmark/image.hpp"
#include "wmark/watermark.hpp"

namespace wmark {

struct QualityReport {
  double mse = 0.0;
  double psnr = 0.0;  // +infinity when mse == 0
  double corr = 0.0;
  double nc = 0.0;
  double error_rate_percent = 0.0;

  std::string csv_row() const;
  static std::string csv_header();
};

double mse(const Raster& a, const Raster& b);
double mse(const Plane& a, const Plane& b);

/// 10*log10(255^2 / MSE); +infinity for identical inputs.
double psnr(const Raster& a, const Raster& b);
double psnr(const Plane& a, const Plane& b);

/// Pearson correlation over flattened samples. Throws spec_error when both
/// inputs are constant.
double corr(const Raster& a, const Raster& b);
double corr(const Plane& a, const Plane& b);

/// Normalized correlation, primary variant: sum(w*w') / sum(w^2).
/// Throws spec_error when w is all zero.
double nc(const WatermarkBits& w, const WatermarkBits& w_rec);

/// The sqrt-denominator variant as printed in the source tables:
/// sum(w*w') / sqrt(sum(w^2)). Exceeds 1 for binary watermarks; reported
/// alongside the primary variant, never asserted against.
double nc_paper(const WatermarkBits& w, const WatermarkBits& w_rec);

/// 100 * (embedded - correctly_recovered) / embedded. Throws spec_error when
/// nothing was embedded.
double error_rate(int embedded_count, int correctly_recovered);

}  // namespace wmark
