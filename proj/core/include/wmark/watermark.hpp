#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wmark/dwt.hpp"
#include "wmark/image.hpp"

namespace wmark {

enum class ChannelMode { YCBCR_Y, RGB_R, RGB_G, RGB_B };

const char* channel_mode_name(ChannelMode m);
ChannelMode channel_mode_from_name(const std::string& s);

/// Embedding/extraction parameters. The invariants 0 < T1 < T2 and
/// 0 < X2 < X1 < (T2-T1)/2 guarantee that the quantized magnitudes T1+X1 and
/// T2-X1 lie strictly inside the extraction range [T1+X2, T2-X2].
struct EmbedParams {
  double t1 = 1500.0;
  double t2 = 1600.0;
  double x1 = 20.0;
  double x2 = 10.0;
  std::uint64_t key = 0;
  int levels = 3;
  ChannelMode channel_mode = ChannelMode::YCBCR_Y;

  void validate() const;  // throws spec_error
};

/// Key-derived binary watermark, same shape as the LL subband it targets.
struct WatermarkBits {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;  // row-major, values 0/1

  std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
  int ones() const;
};

using Position = std::pair<int, int>;  // (row, col) in the LL subband

struct EmbedReport {
  int embedded_count = 0;
  std::vector<Position> positions;  // row-major order
  double psnr = 0.0;
  double corr = 0.0;
  bool zero_payload_warning = false;
};

struct ExtractionReport {
  std::map<Position, std::uint8_t> recovered;
  int extracted_count = 0;
  double nc = 0.0;  // vs the key watermark over recovered positions
  std::optional<double> error_rate_percent;  // set by verify() against an EmbedReport
};

struct VerifyReport {
  int correctly_recovered = 0;
  double error_rate_percent = 0.0;  // only meaningful with an EmbedReport
  double nc = 0.0;                  // primary normalized variant
  double nc_paper = 0.0;            // sqrt-denominator variant, reported for comparison
  double presence_score = 0.0;      // fraction of recovered bits matching the key watermark
  bool present = false;             // score >= 0.9 and at least 16 recovered bits
};

/// Deterministic keyed generator: splitmix-style add-then-finalize mixing,
/// one bit per cell (MSB of the finalized state), emitted row-major.
WatermarkBits generate_watermark(std::uint64_t key, int rows, int cols);

/// Row-major positions where t1 < |coefficient| < t2 (strict on both sides).
std::vector<Position> select_coefficients(const Plane& ll, double t1, double t2);

/// Embed the key watermark into the high-magnitude LL coefficients of the
/// configured channel. Returns the watermarked raster plus a report with the
/// touched positions and PSNR/Corr against the host.
std::pair<Raster, EmbedReport> embed(const Raster& host, const EmbedParams& params);

/// Blind extraction: reads only the (possibly attacked) raster and the params.
ExtractionReport extract(const Raster& img, const EmbedParams& params);

/// Score an extraction against the key watermark; with an EmbedReport the
/// paper-style error rate over the embedded positions is also computed.
VerifyReport verify(const ExtractionReport& extraction, std::uint64_t key, int rows, int cols,
                    const EmbedReport* embed_report = nullptr);

/// Threshold guidance: T2 = 0.85 * max|coeff|, T1 = 0.45 * max|coeff|.
/// Throws spec_error on an all-zero subband.
std::pair<double, double> suggest_thresholds(const Plane& ll);

}  // namespace wmark
