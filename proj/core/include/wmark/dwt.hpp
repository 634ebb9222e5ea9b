#pragma once

#include <array>
#include <vector>

#include "wmark/image.hpp"

namespace wmark {

/// Biorthogonal analysis/synthesis filter pair. The default bank is the 7/9-tap
/// biorthogonal spline pair; coefficients are stored at full double precision
/// so analyze-then-synthesize reproduces any admissible signal within 1e-6.
struct FilterBank {
  std::vector<double> analysis_lowpass;    // 7 taps, centered
  std::vector<double> analysis_highpass;   // 9 taps, centered
  std::vector<double> synthesis_lowpass;   // 9 taps, centered
  std::vector<double> synthesis_highpass;  // 7 taps, centered

  static const FilterBank& spline_7_9();
};

/// Per-level detail subbands. lh: row detail (top-right quadrant),
/// hl: column detail (bottom-left), hh: diagonal (bottom-right).
struct DetailBands {
  Plane lh, hl, hh;
};

/// Multi-level 2-D decomposition: LL_levels plus per-level detail triples.
/// details[k] holds the level-(k+1) subbands; for a 256x256 input at 3 levels
/// the approx plane is 32x32 and there are ten subbands in total.
struct WaveletPyramid {
  int levels = 0;
  int original_width = 0;
  int original_height = 0;
  Plane approx;                      // LL_levels
  std::vector<DetailBands> details;  // index 0 = level 1 (finest)
};

/// Separable forward DWT with whole-sample symmetric extension.
/// Lowpass outputs are taken at even sample positions, highpass at odd;
/// filters are centered on the current sample. Dimensions must be divisible
/// by 2^levels (throws size_error otherwise).
WaveletPyramid forward_dwt2(const Plane& plane, int levels, const FilterBank& fb);

/// Structural inverse of forward_dwt2. Throws size_error on mismatched
/// subband shapes.
Plane inverse_dwt2(const WaveletPyramid& pyr, const FilterBank& fb);

/// Whole-sample symmetric index reflection into [0, n).
int reflect_index(int i, int n);

}  // namespace wmark
