#pragma once

#include "wmark/image.hpp"

namespace wmark {

// Full-range (JPEG) BT.601 conversion. The forward transform keeps the planes
// in floating point; quantization to 8 bits happens only in ycbcr_to_rgb.

/// Convert an RGB raster to floating-point Y, Cb, Cr planes (no rounding).
PlaneSet rgb_to_ycbcr(const Raster& img);

/// Apply the inverse matrix per pixel, round half away from zero, clamp to [0,255].
Raster ycbcr_to_rgb(const PlaneSet& p);

/// Convert an RGB raster to floating-point R, G, B planes (RGB channel modes).
PlaneSet rgb_to_planes(const Raster& img);

/// Quantize RGB-mode planes back to a raster (same rounding/clamping rule).
Raster planes_to_rgb(const PlaneSet& p);

/// Round half away from zero, then clamp to [0,255].
std::uint8_t quantize_sample(double x);

}  // namespace wmark
