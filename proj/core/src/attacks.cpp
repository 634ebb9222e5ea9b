#include "wmark/attacks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <vector>

#include "wmark/color.hpp"

namespace wmark {

namespace {

const std::array<int, 64> kLumaTable = {
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};

const std::array<int, 64> kChromaTable = {
    17, 18, 24, 47, 99, 99, 99, 99, 18, 21, 26, 66, 99, 99, 99, 99,
    24, 26, 56, 99, 99, 99, 99, 99, 47, 66, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99,
    99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99};

std::array<double, 64> scale_table(const std::array<int, 64>& base, double quality) {
  const double s = quality < 50.0 ? 5000.0 / quality : 200.0 - 2.0 * quality;
  std::array<double, 64> out{};
  for (int i = 0; i < 64; ++i) {
    double q = std::floor((base[i] * s + 50.0) / 100.0);
    out[i] = std::clamp(q, 1.0, 255.0);
  }
  return out;
}

// 8-point orthonormal DCT-II basis matrix.
const std::array<double, 64>& dct_basis() {
  static const std::array<double, 64> m = [] {
    std::array<double, 64> b{};
    for (int k = 0; k < 8; ++k) {
      const double a = k == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int n = 0; n < 8; ++n)
        b[k * 8 + n] = a * std::cos(std::numbers::pi * (2 * n + 1) * k / 16.0);
    }
    return b;
  }();
  return m;
}

void dct8x8(const double* in, double* out, bool inverse) {
  const auto& m = dct_basis();
  double tmp[64];
  // rows
  for (int r = 0; r < 8; ++r) {
    for (int k = 0; k < 8; ++k) {
      double a = 0.0;
      for (int n = 0; n < 8; ++n)
        a += (inverse ? m[n * 8 + k] : m[k * 8 + n]) * in[r * 8 + n];
      tmp[r * 8 + k] = a;
    }
  }
  // columns
  for (int c = 0; c < 8; ++c) {
    for (int k = 0; k < 8; ++k) {
      double a = 0.0;
      for (int n = 0; n < 8; ++n)
        a += (inverse ? m[n * 8 + k] : m[k * 8 + n]) * tmp[n * 8 + c];
      out[k * 8 + c] = a;
    }
  }
}

// Quantize one plane blockwise; appends the quantized integers for the
// entropy estimate.
void degrade_plane(Plane& p, const std::array<double, 64>& qtab, std::vector<long>& coeffs) {
  double blk[64], freq[64];
  for (int by = 0; by < p.height; by += 8) {
    for (int bx = 0; bx < p.width; bx += 8) {
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) blk[y * 8 + x] = p.at(by + y, bx + x) - 128.0;
      dct8x8(blk, freq, false);
      for (int i = 0; i < 64; ++i) {
        const long q = std::lround(freq[i] / qtab[i]);
        coeffs.push_back(q);
        freq[i] = double(q) * qtab[i];
      }
      dct8x8(freq, blk, true);
      for (int y = 0; y < 8; ++y)
        for (int x = 0; x < 8; ++x) p.at(by + y, bx + x) = blk[y * 8 + x] + 128.0;
    }
  }
}

double entropy_bits(const std::vector<long>& coeffs) {
  std::map<long, std::size_t> hist;
  for (long c : coeffs) ++hist[c];
  const double n = double(coeffs.size());
  double h = 0.0;
  for (const auto& [val, cnt] : hist) {
    (void)val;
    const double pr = cnt / n;
    h -= pr * std::log2(pr);
  }
  return h * n;
}

}  // namespace

JpegResult jpeg_degrade(const Raster& img, double quality) {
  if (img.width % 8 != 0 || img.height % 8 != 0)
    throw size_error("jpeg attack requires dimensions divisible by 8");
  quality = std::clamp(quality, 1.0, 100.0);

  PlaneSet p = rgb_to_ycbcr(img);
  const auto qy = scale_table(kLumaTable, quality);
  const auto qc = scale_table(kChromaTable, quality);
  std::vector<long> coeffs;
  coeffs.reserve(img.data.size());
  degrade_plane(p.plane0, qy, coeffs);
  degrade_plane(p.plane1, qc, coeffs);
  degrade_plane(p.plane2, qc, coeffs);

  JpegResult res;
  res.image = ycbcr_to_rgb(p);
  res.quality = quality;
  const double raw_bits = double(img.data.size()) * 8.0;
  const double compressed_bits = entropy_bits(coeffs) + 1024.0;  // header constant
  res.achieved_cr = raw_bits / compressed_bits;
  return res;
}

JpegResult jpeg_attack(const Raster& img, double target_cr) {
  if (!(target_cr > 1.0)) throw spec_error("jpeg attack requires cr > 1");
  // Severity scale calibrated to the reference operating points: cr in
  // [5, 20] maps to quality 10..40, low cr being the harsher setting.
  return jpeg_degrade(img, 2.0 * target_cr);
}

Raster rotate_once(const Raster& img, double angle_degrees) {
  const int w = img.width, h = img.height;
  Raster out(w, h);
  const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
  const double th = angle_degrees * std::numbers::pi / 180.0;
  const double ct = std::cos(th), st = std::sin(th);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double dx = x - cx, dy = y - cy;
      const double sx = ct * dx + st * dy + cx;
      const double sy = -st * dx + ct * dy + cy;
      const int x0 = int(std::floor(sx)), y0 = int(std::floor(sy));
      const double fx = sx - x0, fy = sy - y0;
      for (int c = 0; c < 3; ++c) {
        auto sample = [&](int yy, int xx) -> double {
          if (yy < 0 || yy >= h || xx < 0 || xx >= w) return 0.0;
          return img.at(yy, xx, c);
        };
        const double v = (1 - fx) * (1 - fy) * sample(y0, x0) +
                         fx * (1 - fy) * sample(y0, x0 + 1) +
                         (1 - fx) * fy * sample(y0 + 1, x0) +
                         fx * fy * sample(y0 + 1, x0 + 1);
        out.at(y, x, c) = quantize_sample(v);
      }
    }
  }
  return out;
}

Raster rotate_attack(const Raster& img, double angle_degrees) {
  return rotate_once(rotate_once(img, angle_degrees), -angle_degrees);
}

Raster median_attack(const Raster& img, int window) {
  if (window != 3 && window != 5) throw spec_error("median window must be 3 or 5");
  const int w = img.width, h = img.height, k = window / 2;
  Raster out(w, h);
  std::vector<std::uint8_t> vals;
  vals.reserve(static_cast<std::size_t>(window) * window);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        vals.clear();
        for (int dy = -k; dy <= k; ++dy) {
          for (int dx = -k; dx <= k; ++dx) {
            const int yy = std::clamp(y + dy, 0, h - 1);
            const int xx = std::clamp(x + dx, 0, w - 1);
            vals.push_back(img.at(yy, xx, c));
          }
        }
        auto mid = vals.begin() + vals.size() / 2;
        std::nth_element(vals.begin(), mid, vals.end());
        out.at(y, x, c) = *mid;
      }
    }
  }
  return out;
}

AttackSpec AttackSpec::parse(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw spec_error("attack spec missing ':': " + s);
  const std::string kind = s.substr(0, colon);
  const std::string rest = s.substr(colon + 1);
  const auto eq = rest.find('=');
  if (eq == std::string::npos) throw spec_error("attack spec missing '=': " + s);
  const std::string pname = rest.substr(0, eq);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(rest.substr(eq + 1), &used);
    if (used != rest.size() - eq - 1) throw spec_error("trailing characters");
  } catch (const std::exception&) {
    throw spec_error("bad attack parameter value: " + s);
  }

  AttackSpec spec;
  if (kind == "jpeg" && pname == "cr") {
    if (!(value > 1.0)) throw spec_error("jpeg cr must be > 1");
    spec.kind = AttackKind::JPEG_CR;
    spec.cr = value;
  } else if (kind == "rotate" && pname == "angle") {
    if (!(value > -180.0 && value <= 180.0))
      throw spec_error("rotation angle must lie in (-180, 180]");
    spec.kind = AttackKind::ROTATE;
    spec.angle = value;
  } else if (kind == "median" && pname == "window") {
    if (value != 3.0 && value != 5.0) throw spec_error("median window must be 3 or 5");
    spec.kind = AttackKind::MEDIAN;
    spec.window = int(value);
  } else {
    throw spec_error("unknown attack spec: " + s);
  }
  return spec;
}

std::string AttackSpec::to_string() const {
  char buf[64];
  switch (kind) {
    case AttackKind::JPEG_CR:
      std::snprintf(buf, sizeof(buf), "jpeg:cr=%g", cr);
      break;
    case AttackKind::ROTATE:
      std::snprintf(buf, sizeof(buf), "rotate:angle=%g", angle);
      break;
    case AttackKind::MEDIAN:
      std::snprintf(buf, sizeof(buf), "median:window=%d", window);
      break;
  }
  return buf;
}

Raster apply_attack(const Raster& img, const AttackSpec& spec) {
  switch (spec.kind) {
    case AttackKind::JPEG_CR: return jpeg_attack(img, spec.cr).image;
    case AttackKind::ROTATE: return rotate_attack(img, spec.angle);
    case AttackKind::MEDIAN: return median_attack(img, spec.window);
  }
  throw spec_error("unreachable attack kind");
}

}  // namespace wmark
