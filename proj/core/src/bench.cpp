#include "wmark/bench.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "wmark/image_io.hpp"
#include "wmark/metrics.hpp"

namespace wmark {

std::vector<std::string> BenchSuite::default_attacks() {
  return {"none",
          "jpeg:cr=5",  "jpeg:cr=10",  "jpeg:cr=15",  "jpeg:cr=20",
          "rotate:angle=20", "rotate:angle=-60", "rotate:angle=130", "rotate:angle=-110",
          "median:window=3", "median:window=5"};
}

BenchResult run_bench(const BenchSuite& suite) {
  BenchResult result;
  for (const auto& path : suite.image_paths) {
    if (!std::filesystem::exists(path)) {
      result.missing_images.push_back(path);
      continue;
    }
    const Raster host = load_image(path);
    const std::string name = std::filesystem::path(path).stem().string();
    for (ChannelMode mode : suite.modes) {
      EmbedParams params = suite.base_params;
      params.channel_mode = mode;
      auto [wmk, embed_rep] = embed(host, params);
      const int rows = host.height >> params.levels;
      const int cols = host.width >> params.levels;
      for (const auto& attack_str : suite.attacks) {
        Raster attacked =
            attack_str == "none" ? wmk : apply_attack(wmk, AttackSpec::parse(attack_str));
        ExtractionReport ext = extract(attacked, params);
        VerifyReport ver = verify(ext, params.key, rows, cols, &embed_rep);

        BenchRow row;
        row.image = name;
        row.mode = mode;
        row.attack = attack_str;
        row.embedded_bits = embed_rep.embedded_count;
        row.extracted_bits = ver.correctly_recovered;
        row.nc = ver.nc;
        row.error_rate_percent =
            embed_rep.embedded_count > 0 ? ver.error_rate_percent : 0.0;
        row.psnr = embed_rep.psnr;
        row.corr = embed_rep.corr;
        result.rows.push_back(std::move(row));
      }
    }
  }
  return result;
}

std::string BenchResult::csv() const {
  std::ostringstream os;
  os << "image,mode,attack,embedded_bits,extracted_bits,nc,error_rate_percent,psnr_db,corr\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%s,%s,%d,%d,%.4f,%.4f,%.4f,%.6f\n", r.image.c_str(),
                  channel_mode_name(r.mode), r.attack.c_str(), r.embedded_bits,
                  r.extracted_bits, r.nc, r.error_rate_percent, r.psnr, r.corr);
    os << buf;
  }
  return os.str();
}

std::string BenchResult::comparison_table() const {
  // Pair up YCbCr-Y and RGB rows sharing (image, attack).
  std::ostringstream os;
  os << "image            attack              ycbcr-y er%   rgb er%\n";
  char buf[256];
  for (const auto& r : rows) {
    if (r.mode != ChannelMode::YCBCR_Y) continue;
    for (const auto& o : rows) {
      if (o.mode == ChannelMode::YCBCR_Y || o.image != r.image || o.attack != r.attack)
        continue;
      std::snprintf(buf, sizeof(buf), "%-16s %-18s %10.2f %9.2f\n", r.image.c_str(),
                    r.attack.c_str(), r.error_rate_percent, o.error_rate_percent);
      os << buf;
    }
  }
  return os.str();
}

}  // namespace wmark
