#pragma once

#include <string>

#include "wmark/image.hpp"

namespace wmark {

/// Load a 3-channel 8-bit image: PNG, binary PPM (P6), or 24-bit
/// uncompressed BMP, detected by file signature. Throws io_error.
Raster load_image(const std::string& path);

/// Lossless writers. Format chosen by extension in save_image
/// (.png or .ppm); anything else is an io_error.
void save_image(const Raster& img, const std::string& path);
void save_png(const Raster& img, const std::string& path);
void save_ppm(const Raster& img, const std::string& path);

}  // namespace wmark
