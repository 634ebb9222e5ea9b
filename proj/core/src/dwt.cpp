#include "wmark/dwt.hpp"

#include <string>

namespace wmark {

const FilterBank& FilterBank::spline_7_9() {
  // Full-precision values of the 7/9-tap biorthogonal spline pair; they print
  // as {-0.0645, -0.0407, 0.4181, 0.7885, ...} etc. at four decimals. The
  // rounded four-decimal values do not reconstruct below ~1e-4, so the exact
  // ones are normative here.
  static const FilterBank fb{
      {-0.064538882628938379, -0.040689417609558305, 0.41809227322221210,
       0.78848561640566406, 0.41809227322221210, -0.040689417609558305,
       -0.064538882628938379},
      {-0.037828455506995338, -0.023849465019380071, 0.11062440441842306,
       0.37740285561265385, -0.85269867900940310, 0.37740285561265385,
       0.11062440441842306, -0.023849465019380071, -0.037828455506995338},
      {0.037828455506995338, -0.023849465019380071, -0.11062440441842306,
       0.37740285561265385, 0.85269867900940310, 0.37740285561265385,
       -0.11062440441842306, -0.023849465019380071, 0.037828455506995338},
      {-0.064538882628938379, 0.040689417609558305, 0.41809227322221210,
       -0.78848561640566406, 0.41809227322221210, 0.040689417609558305,
       -0.064538882628938379}};
  return fb;
}

int reflect_index(int i, int n) {
  const int p = 2 * (n - 1);
  i %= p;
  if (i < 0) i += p;
  return i < n ? i : p - i;
}

namespace {

// One analysis pass along a length-n signal: lowpass sampled at even
// positions, highpass at odd positions, filters centered.
void analyze_1d(const double* x, int n, double* lo, double* hi, const FilterBank& fb) {
  const auto& f0 = fb.analysis_lowpass;
  const auto& f1 = fb.analysis_highpass;
  const int c0 = static_cast<int>(f0.size()) / 2;
  const int c1 = static_cast<int>(f1.size()) / 2;
  for (int i = 0; i < n / 2; ++i) {
    double a = 0.0;
    for (int k = -c0; k <= c0; ++k) a += f0[k + c0] * x[reflect_index(2 * i + k, n)];
    lo[i] = a;
    double b = 0.0;
    for (int k = -c1; k <= c1; ++k) b += f1[k + c1] * x[reflect_index(2 * i + 1 + k, n)];
    hi[i] = b;
  }
}

// Inverse pass: subbands are re-expanded onto their sample grids (lowpass at
// even, highpass at odd positions), filtered with the centered synthesis
// filters under the same symmetric extension, and summed.
void synthesize_1d(const double* lo, const double* hi, int n, double* x, const FilterBank& fb) {
  const auto& f0 = fb.synthesis_lowpass;
  const auto& f1 = fb.synthesis_highpass;
  const int c0 = static_cast<int>(f0.size()) / 2;
  const int c1 = static_cast<int>(f1.size()) / 2;
  std::vector<double> ul(n, 0.0), uh(n, 0.0);
  for (int i = 0; i < n / 2; ++i) {
    ul[2 * i] = lo[i];
    uh[2 * i + 1] = hi[i];
  }
  for (int m = 0; m < n; ++m) {
    double a = 0.0;
    for (int k = -c0; k <= c0; ++k) a += f0[k + c0] * ul[reflect_index(m + k, n)];
    for (int k = -c1; k <= c1; ++k) a += f1[k + c1] * uh[reflect_index(m + k, n)];
    x[m] = a;
  }
}

// Single-level 2-D step on a w x h region: rows then columns, quadrant layout
// [LL HL; LH HH] with lowpass halves first.
void forward_level(Plane& buf, int w, int h, const FilterBank& fb) {
  std::vector<double> line(std::max(w, h));
  std::vector<double> lo(std::max(w, h) / 2), hi(std::max(w, h) / 2);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) line[x] = buf.at(y, x);
    analyze_1d(line.data(), w, lo.data(), hi.data(), fb);
    for (int x = 0; x < w / 2; ++x) {
      buf.at(y, x) = lo[x];
      buf.at(y, x + w / 2) = hi[x];
    }
  }
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) line[y] = buf.at(y, x);
    analyze_1d(line.data(), h, lo.data(), hi.data(), fb);
    for (int y = 0; y < h / 2; ++y) {
      buf.at(y, x) = lo[y];
      buf.at(y + h / 2, x) = hi[y];
    }
  }
}

void inverse_level(Plane& buf, int w, int h, const FilterBank& fb) {
  std::vector<double> line(std::max(w, h));
  std::vector<double> lo(std::max(w, h) / 2), hi(std::max(w, h) / 2);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h / 2; ++y) {
      lo[y] = buf.at(y, x);
      hi[y] = buf.at(y + h / 2, x);
    }
    synthesize_1d(lo.data(), hi.data(), h, line.data(), fb);
    for (int y = 0; y < h; ++y) buf.at(y, x) = line[y];
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w / 2; ++x) {
      lo[x] = buf.at(y, x);
      hi[x] = buf.at(y, x + w / 2);
    }
    synthesize_1d(lo.data(), hi.data(), w, line.data(), fb);
    for (int x = 0; x < w; ++x) buf.at(y, x) = line[x];
  }
}

}  // namespace

WaveletPyramid forward_dwt2(const Plane& plane, int levels, const FilterBank& fb) {
  if (levels < 1) throw size_error("levels must be >= 1");
  const int div = 1 << levels;
  if (plane.width % div != 0 || plane.height % div != 0)
    throw size_error("plane dimensions " + std::to_string(plane.width) + "x" +
                     std::to_string(plane.height) + " not divisible by 2^" +
                     std::to_string(levels));

  WaveletPyramid pyr;
  pyr.levels = levels;
  pyr.original_width = plane.width;
  pyr.original_height = plane.height;

  Plane buf = plane;
  int w = plane.width, h = plane.height;
  for (int l = 0; l < levels; ++l) {
    forward_level(buf, w, h, fb);
    DetailBands d;
    d.lh = Plane(w / 2, h / 2);
    d.hl = Plane(w / 2, h / 2);
    d.hh = Plane(w / 2, h / 2);
    for (int y = 0; y < h / 2; ++y) {
      for (int x = 0; x < w / 2; ++x) {
        d.lh.at(y, x) = buf.at(y, x + w / 2);
        d.hl.at(y, x) = buf.at(y + h / 2, x);
        d.hh.at(y, x) = buf.at(y + h / 2, x + w / 2);
      }
    }
    pyr.details.push_back(std::move(d));
    w /= 2;
    h /= 2;
  }
  pyr.approx = Plane(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) pyr.approx.at(y, x) = buf.at(y, x);
  return pyr;
}

Plane inverse_dwt2(const WaveletPyramid& pyr, const FilterBank& fb) {
  const int W = pyr.original_width, H = pyr.original_height;
  if (pyr.levels < 1 || static_cast<int>(pyr.details.size()) != pyr.levels)
    throw size_error("pyramid has inconsistent level count");
  if (pyr.approx.width != W >> pyr.levels || pyr.approx.height != H >> pyr.levels)
    throw size_error("approx subband shape does not match pyramid dimensions");
  for (int l = 0; l < pyr.levels; ++l) {
    const int w = W >> (l + 1), h = H >> (l + 1);
    const DetailBands& d = pyr.details[l];
    if (d.lh.width != w || d.lh.height != h || d.hl.width != w || d.hl.height != h ||
        d.hh.width != w || d.hh.height != h)
      throw size_error("detail subband shape mismatch at level " + std::to_string(l + 1));
  }

  Plane buf(W, H);
  const int aw = pyr.approx.width, ah = pyr.approx.height;
  for (int y = 0; y < ah; ++y)
    for (int x = 0; x < aw; ++x) buf.at(y, x) = pyr.approx.at(y, x);
  for (int l = pyr.levels - 1; l >= 0; --l) {
    const int w = W >> l, h = H >> l;
    const DetailBands& d = pyr.details[l];
    for (int y = 0; y < h / 2; ++y) {
      for (int x = 0; x < w / 2; ++x) {
        buf.at(y, x + w / 2) = d.lh.at(y, x);
        buf.at(y + h / 2, x) = d.hl.at(y, x);
        buf.at(y + h / 2, x + w / 2) = d.hh.at(y, x);
      }
    }
    inverse_level(buf, w, h, fb);
  }
  return buf;
}

}  // namespace wmark
