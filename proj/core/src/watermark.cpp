#include "wmark/watermark.hpp"

#include <algorithm>
#include <cmath>

#include "wmark/color.hpp"
#include "wmark/metrics.hpp"

namespace wmark {

const char* channel_mode_name(ChannelMode m) {
  switch (m) {
    case ChannelMode::YCBCR_Y: return "ycbcr-y";
    case ChannelMode::RGB_R: return "rgb-r";
    case ChannelMode::RGB_G: return "rgb-g";
    case ChannelMode::RGB_B: return "rgb-b";
  }
  return "?";
}

ChannelMode channel_mode_from_name(const std::string& s) {
  if (s == "ycbcr-y" || s == "y") return ChannelMode::YCBCR_Y;
  if (s == "rgb-r" || s == "r") return ChannelMode::RGB_R;
  if (s == "rgb-g" || s == "g") return ChannelMode::RGB_G;
  if (s == "rgb-b" || s == "b") return ChannelMode::RGB_B;
  throw spec_error("unknown channel mode: " + s);
}

void EmbedParams::validate() const {
  if (!(0.0 < t1 && t1 < t2)) throw spec_error("thresholds must satisfy 0 < T1 < T2");
  if (!(0.0 < x2 && x2 < x1 && x1 < (t2 - t1) / 2.0))
    throw spec_error("offsets must satisfy 0 < X2 < X1 < (T2-T1)/2");
  if (levels < 1) throw spec_error("levels must be >= 1");
}

int WatermarkBits::ones() const {
  int n = 0;
  for (auto b : bits) n += b;
  return n;
}

WatermarkBits generate_watermark(std::uint64_t key, int rows, int cols) {
  if (rows < 1 || cols < 1) throw spec_error("watermark shape must be at least 1x1");
  WatermarkBits w;
  w.rows = rows;
  w.cols = cols;
  w.bits.resize(static_cast<std::size_t>(rows) * cols);
  std::uint64_t state = key;
  for (auto& bit : w.bits) {
    state += 0x9E3779B97F4B7C15ULL;
    std::uint64_t z = state;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    bit = static_cast<std::uint8_t>(z >> 63);
  }
  return w;
}

std::vector<Position> select_coefficients(const Plane& ll, double t1, double t2) {
  if (!(t1 < t2)) throw spec_error("select_coefficients requires T1 < T2");
  std::vector<Position> out;
  for (int r = 0; r < ll.height; ++r) {
    for (int c = 0; c < ll.width; ++c) {
      const double m = std::fabs(ll.at(r, c));
      if (m > t1 && m < t2) out.emplace_back(r, c);
    }
  }
  return out;
}

namespace {

// The designated plane for a channel mode, plus the PlaneSet it lives in.
PlaneSet convert_for_mode(const Raster& img, ChannelMode mode) {
  return mode == ChannelMode::YCBCR_Y ? rgb_to_ycbcr(img) : rgb_to_planes(img);
}

Plane& designated_plane(PlaneSet& p, ChannelMode mode) {
  switch (mode) {
    case ChannelMode::YCBCR_Y:
    case ChannelMode::RGB_R: return p.plane0;
    case ChannelMode::RGB_G: return p.plane1;
    case ChannelMode::RGB_B: return p.plane2;
  }
  return p.plane0;
}

Raster reconvert(const PlaneSet& p) {
  return p.mode == ColorMode::YCBCR ? ycbcr_to_rgb(p) : planes_to_rgb(p);
}

}  // namespace

std::pair<Raster, EmbedReport> embed(const Raster& host, const EmbedParams& params) {
  params.validate();
  PlaneSet planes = convert_for_mode(host, params.channel_mode);
  Plane& plane = designated_plane(planes, params.channel_mode);

  WaveletPyramid pyr = forward_dwt2(plane, params.levels, FilterBank::spline_7_9());
  Plane& ll = pyr.approx;

  const std::vector<Position> positions = select_coefficients(ll, params.t1, params.t2);
  const WatermarkBits wm = generate_watermark(params.key, ll.height, ll.width);

  for (const auto& [r, c] : positions) {
    const double sign = ll.at(r, c) >= 0.0 ? 1.0 : -1.0;
    const double mag = wm.at(r, c) ? params.t2 - params.x1 : params.t1 + params.x1;
    ll.at(r, c) = sign * mag;
  }

  plane = inverse_dwt2(pyr, FilterBank::spline_7_9());
  Raster out = reconvert(planes);

  EmbedReport rep;
  rep.embedded_count = static_cast<int>(positions.size());
  rep.positions = positions;
  rep.psnr = psnr(host, out);
  rep.corr = corr(host, out);
  rep.zero_payload_warning = positions.empty();
  return {std::move(out), std::move(rep)};
}

ExtractionReport extract(const Raster& img, const EmbedParams& params) {
  params.validate();
  PlaneSet planes = convert_for_mode(img, params.channel_mode);
  const Plane& plane = designated_plane(planes, params.channel_mode);

  const WaveletPyramid pyr = forward_dwt2(plane, params.levels, FilterBank::spline_7_9());
  const Plane& ll = pyr.approx;

  const double lo = params.t1 + params.x2;
  const double hi = params.t2 - params.x2;
  const double mid = (params.t1 + params.t2) / 2.0;

  ExtractionReport rep;
  WatermarkBits recovered_matrix;
  recovered_matrix.rows = ll.height;
  recovered_matrix.cols = ll.width;
  recovered_matrix.bits.assign(static_cast<std::size_t>(ll.width) * ll.height, 0);
  for (int r = 0; r < ll.height; ++r) {
    for (int c = 0; c < ll.width; ++c) {
      const double m = std::fabs(ll.at(r, c));
      if (m >= lo && m <= hi) {
        const std::uint8_t bit = m >= mid ? 1 : 0;
        rep.recovered[{r, c}] = bit;
        recovered_matrix.bits[static_cast<std::size_t>(r) * ll.width + c] = bit;
      }
    }
  }
  rep.extracted_count = static_cast<int>(rep.recovered.size());

  // Blind NC: the key watermark masked to the recovered positions vs the
  // recovered bits (no embedding report is available here).
  const WatermarkBits wm = generate_watermark(params.key, ll.height, ll.width);
  WatermarkBits masked = wm;
  std::fill(masked.bits.begin(), masked.bits.end(), 0);
  for (const auto& [pos, bit] : rep.recovered) {
    (void)bit;
    masked.bits[static_cast<std::size_t>(pos.first) * ll.width + pos.second] =
        wm.at(pos.first, pos.second);
  }
  rep.nc = masked.ones() > 0 ? nc(masked, recovered_matrix) : 0.0;
  return rep;
}

VerifyReport verify(const ExtractionReport& extraction, std::uint64_t key, int rows, int cols,
                    const EmbedReport* embed_report) {
  const WatermarkBits wm = generate_watermark(key, rows, cols);
  VerifyReport rep;

  int matches = 0;
  for (const auto& [pos, bit] : extraction.recovered) {
    if (wm.at(pos.first, pos.second) == bit) ++matches;
  }
  rep.presence_score = extraction.recovered.empty()
                           ? 0.0
                           : double(matches) / double(extraction.recovered.size());
  rep.present = rep.presence_score >= 0.9 && extraction.recovered.size() >= 16;

  if (embed_report) {
    WatermarkBits embedded = wm;  // key watermark masked to embedded positions
    std::fill(embedded.bits.begin(), embedded.bits.end(), 0);
    WatermarkBits recovered = embedded;
    for (const auto& [r, c] : embed_report->positions)
      embedded.bits[static_cast<std::size_t>(r) * cols + c] = wm.at(r, c);
    for (const auto& [pos, bit] : extraction.recovered)
      recovered.bits[static_cast<std::size_t>(pos.first) * cols + pos.second] = bit;

    int correct = 0;
    for (const auto& [r, c] : embed_report->positions) {
      auto it = extraction.recovered.find({r, c});
      if (it != extraction.recovered.end() && it->second == wm.at(r, c)) ++correct;
    }
    rep.correctly_recovered = correct;
    rep.error_rate_percent = error_rate(embed_report->embedded_count, correct);
    if (embedded.ones() > 0) {
      rep.nc = nc(embedded, recovered);
      rep.nc_paper = nc_paper(embedded, recovered);
    }
  }
  return rep;
}

std::pair<double, double> suggest_thresholds(const Plane& ll) {
  if (ll.v.empty()) throw spec_error("suggest_thresholds: empty subband");
  double mx = 0.0;
  for (double x : ll.v) mx = std::max(mx, std::fabs(x));
  if (mx == 0.0) throw spec_error("suggest_thresholds: all-zero subband");
  return {0.45 * mx, 0.85 * mx};
}

}  // namespace wmark
