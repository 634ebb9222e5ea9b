#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmark {

/// I/O failure (unreadable file, unsupported format). CLI exit code 2.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dimension constraint violation. CLI exit code 3.
struct size_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed parameter or attack spec. CLI exit code 4.
struct spec_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 8-bit interleaved RGB raster, row-major.
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // width*height*3

  Raster() = default;
  Raster(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

  std::uint8_t& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  std::uint8_t at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  bool same_shape(const Raster& o) const { return width == o.width && height == o.height; }
};

/// Single floating-point image plane, row-major.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> v;

  Plane() = default;
  Plane(int w, int h) : width(w), height(h), v(static_cast<std::size_t>(w) * h, 0.0) {}

  double& at(int y, int x) { return v[static_cast<std::size_t>(y) * width + x]; }
  double at(int y, int x) const { return v[static_cast<std::size_t>(y) * width + x]; }
  bool same_shape(const Plane& o) const { return width == o.width && height == o.height; }
};

enum class ColorMode { YCBCR, RGB };

/// Three floating-point planes carrying fractional values through the pipeline.
/// In YCBCR mode the planes are Y, Cb, Cr; in RGB mode they are R, G, B.
struct PlaneSet {
  int width = 0;
  int height = 0;
  ColorMode mode = ColorMode::YCBCR;
  Plane plane0, plane1, plane2;
};

}  // namespace wmark
