#include "wmark/color.hpp"

#include <cmath>

namespace wmark {

std::uint8_t quantize_sample(double x) {
  double r = (x >= 0.0) ? std::floor(x + 0.5) : std::ceil(x - 0.5);
  if (r < 0.0) r = 0.0;
  if (r > 255.0) r = 255.0;
  return static_cast<std::uint8_t>(r);
}

PlaneSet rgb_to_ycbcr(const Raster& img) {
  PlaneSet p;
  p.width = img.width;
  p.height = img.height;
  p.mode = ColorMode::YCBCR;
  p.plane0 = Plane(img.width, img.height);
  p.plane1 = Plane(img.width, img.height);
  p.plane2 = Plane(img.width, img.height);
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = img.data[3 * i + 0];
    const double g = img.data[3 * i + 1];
    const double b = img.data[3 * i + 2];
    p.plane0.v[i] = 0.299 * r + 0.587 * g + 0.114 * b;
    p.plane1.v[i] = 128.0 - 0.168736 * r - 0.331264 * g + 0.5 * b;
    p.plane2.v[i] = 128.0 + 0.5 * r - 0.418688 * g - 0.081312 * b;
  }
  return p;
}

Raster ycbcr_to_rgb(const PlaneSet& p) {
  Raster out(p.width, p.height);
  const std::size_t n = static_cast<std::size_t>(p.width) * p.height;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = p.plane0.v[i];
    const double cb = p.plane1.v[i] - 128.0;
    const double cr = p.plane2.v[i] - 128.0;
    out.data[3 * i + 0] = quantize_sample(y + 1.402 * cr);
    out.data[3 * i + 1] = quantize_sample(y - 0.344136 * cb - 0.714136 * cr);
    out.data[3 * i + 2] = quantize_sample(y + 1.772 * cb);
  }
  return out;
}

PlaneSet rgb_to_planes(const Raster& img) {
  PlaneSet p;
  p.width = img.width;
  p.height = img.height;
  p.mode = ColorMode::RGB;
  p.plane0 = Plane(img.width, img.height);
  p.plane1 = Plane(img.width, img.height);
  p.plane2 = Plane(img.width, img.height);
  const std::size_t n = static_cast<std::size_t>(img.width) * img.height;
  for (std::size_t i = 0; i < n; ++i) {
    p.plane0.v[i] = img.data[3 * i + 0];
    p.plane1.v[i] = img.data[3 * i + 1];
    p.plane2.v[i] = img.data[3 * i + 2];
  }
  return p;
}

Raster planes_to_rgb(const PlaneSet& p) {
  Raster out(p.width, p.height);
  const std::size_t n = static_cast<std::size_t>(p.width) * p.height;
  for (std::size_t i = 0; i < n; ++i) {
    out.data[3 * i + 0] = quantize_sample(p.plane0.v[i]);
    out.data[3 * i + 1] = quantize_sample(p.plane1.v[i]);
    out.data[3 * i + 2] = quantize_sample(p.plane2.v[i]);
  }
  return out;
}

}  // namespace wmark
