#pragma once

#include <string>
#include <vector>

#include "wmark/attacks.hpp"
#include "wmark/watermark.hpp"

namespace wmark {

/// The robustness evaluation grid: every image x channel mode x attack cell
/// runs embed -> attack -> extract -> verify.
struct BenchSuite {
  std::vector<std::string> image_paths;
  std::vector<ChannelMode> modes = {ChannelMode::YCBCR_Y, ChannelMode::RGB_G};
  EmbedParams base_params;  // key/thresholds shared by all cells

  /// none + jpeg cr {5,10,15,20} + rotate {20,-60,130,-110} + median {3,5}.
  static std::vector<std::string> default_attacks();
  std::vector<std::string> attacks = default_attacks();
};

struct BenchRow {
  std::string image;
  ChannelMode mode = ChannelMode::YCBCR_Y;
  std::string attack;  // "none" or an AttackSpec string
  int embedded_bits = 0;
  int extracted_bits = 0;  // correctly recovered
  double nc = 0.0;
  double error_rate_percent = 0.0;
  double psnr = 0.0;
  double corr = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;  // ordered by (image, mode, attack)
  std::vector<std::string> missing_images;

  std::string csv() const;  // header + one row per cell, deterministic bytes
  /// Side-by-side YCbCr-vs-RGB error-rate comparison per attack cell.
  std::string comparison_table() const;
};

BenchResult run_bench(const BenchSuite& suite);

}  // namespace wmark
