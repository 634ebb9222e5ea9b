#pragma once

#include <string>

#include "wmark/image.hpp"

namespace wmark {

enum class AttackKind { JPEG_CR, ROTATE, MEDIAN };

/// Parsed attack description. CLI syntax: "jpeg:cr=15", "rotate:angle=-60",
/// "median:window=3".
struct AttackSpec {
  AttackKind kind = AttackKind::JPEG_CR;
  double cr = 0.0;     // JPEG_CR, > 1
  double angle = 0.0;  // ROTATE, in (-180, 180]
  int window = 3;      // MEDIAN, 3 or 5

  static AttackSpec parse(const std::string& s);  // throws spec_error
  std::string to_string() const;
};

struct JpegResult {
  Raster image;
  double achieved_cr = 0.0;  // entropy-estimated compression ratio
  double quality = 0.0;      // quantization quality factor actually applied
};

/// JPEG-style degradation: YCbCr, 8x8 blockwise DCT, baseline table
/// quantization at a quality factor, inverse, reconvert. The cr knob follows
/// the severity scale of the source experiments (low cr = harsh); internally
/// quality = clamp(2*cr, 1, 100). The achieved compression ratio is estimated
/// from the zeroth-order entropy of the quantized coefficients and reported.
JpegResult jpeg_attack(const Raster& img, double target_cr);

/// Same degradation at an explicit quality factor in [1, 100].
JpegResult jpeg_degrade(const Raster& img, double quality);

/// Rotate about the image center with bilinear interpolation (zeros outside),
/// rotate back by the negated angle, keep the original dimensions.
Raster rotate_attack(const Raster& img, double angle_degrees);

/// One-way rotation (the realignment model applies it twice).
Raster rotate_once(const Raster& img, double angle_degrees);

/// Per-channel sliding-window median with edge replication; window 3 or 5.
Raster median_attack(const Raster& img, int window);

/// Apply any parsed attack.
Raster apply_attack(const Raster& img, const AttackSpec& spec);

}  // namespace wmark
