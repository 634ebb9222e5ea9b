// Command-line front end: embed | extract | attack | metrics | bench | keygen.

#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wmark/attacks.hpp"
#include "wmark/bench.hpp"
#include "wmark/color.hpp"
#include "wmark/image_io.hpp"
#include "wmark/metrics.hpp"
#include "wmark/report.hpp"
#include "wmark/watermark.hpp"

namespace {

constexpr int kExitIo = 2;
constexpr int kExitDims = 3;
constexpr int kExitSpec = 4;

struct CommonOpts {
  std::string in_path, out_path, report_path;
  std::uint64_t key = 0;
  double t1 = 1500.0, t2 = 1600.0, x1 = 20.0, x2 = 10.0;
  int levels = 3;
  std::string mode = "ycbcr-y";
  bool auto_thresholds = false;
};

void add_param_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--key", o->key, "64-bit watermark key");
  cmd->add_option("--t1", o->t1, "lower magnitude threshold");
  cmd->add_option("--t2", o->t2, "upper magnitude threshold");
  cmd->add_option("--x1", o->x1, "embedding quantization offset");
  cmd->add_option("--x2", o->x2, "extraction tolerance");
  cmd->add_option("--levels", o->levels, "decomposition levels");
  cmd->add_option("--mode", o->mode, "channel mode: ycbcr-y|rgb-r|rgb-g|rgb-b");
}

wmark::EmbedParams make_params(const CommonOpts& o) {
  wmark::EmbedParams p;
  p.t1 = o.t1;
  p.t2 = o.t2;
  p.x1 = o.x1;
  p.x2 = o.x2;
  p.key = o.key;
  p.levels = o.levels;
  p.channel_mode = wmark::channel_mode_from_name(o.mode);
  p.validate();
  return p;
}

void check_dims(const wmark::Raster& img, int levels) {
  const int div = 1 << levels;
  if (img.width % div != 0 || img.height % div != 0)
    throw wmark::size_error("image dimensions must be divisible by " + std::to_string(div));
}

// Applies --auto-thresholds: T1/T2 from the host's own LL subband.
void maybe_auto_thresholds(const wmark::Raster& host, wmark::EmbedParams* p) {
  wmark::PlaneSet planes = p->channel_mode == wmark::ChannelMode::YCBCR_Y
                               ? wmark::rgb_to_ycbcr(host)
                               : wmark::rgb_to_planes(host);
  const wmark::Plane& plane = p->channel_mode == wmark::ChannelMode::RGB_G ? planes.plane1
                              : p->channel_mode == wmark::ChannelMode::RGB_B ? planes.plane2
                                                                             : planes.plane0;
  auto pyr = wmark::forward_dwt2(plane, p->levels, wmark::FilterBank::spline_7_9());
  auto [t1, t2] = wmark::suggest_thresholds(pyr.approx);
  p->t1 = t1;
  p->t2 = t2;
  // keep offsets valid for narrow bands
  if (!(p->x1 < (t2 - t1) / 2.0)) {
    p->x1 = (t2 - t1) / 5.0;
    p->x2 = p->x1 / 2.0;
  }
  std::fprintf(stderr, "auto thresholds: T1=%.2f T2=%.2f\n", t1, t2);
}

int cmd_embed(const CommonOpts& o) {
  wmark::EmbedParams params = make_params(o);
  const wmark::Raster host = wmark::load_image(o.in_path);
  check_dims(host, params.levels);
  if (o.auto_thresholds) maybe_auto_thresholds(host, &params);
  auto [wm, rep] = wmark::embed(host, params);
  wmark::save_image(wm, o.out_path);
  if (!o.report_path.empty())
    wmark::write_text_file(o.report_path, wmark::serialize_embed_report(rep));
  if (rep.zero_payload_warning)
    std::fprintf(stderr, "warning: 0 bits embedded (no coefficients in threshold band)\n");
  std::printf("embedded=%d psnr=%.4f corr=%.6f\n", rep.embedded_count, rep.psnr, rep.corr);
  return 0;
}

int cmd_extract(const CommonOpts& o) {
  wmark::EmbedParams params = make_params(o);
  const wmark::Raster img = wmark::load_image(o.in_path);
  check_dims(img, params.levels);
  wmark::ExtractionReport rep = wmark::extract(img, params);
  if (!o.report_path.empty())
    wmark::write_text_file(o.report_path, wmark::serialize_extraction_report(rep));
  const auto ver = wmark::verify(rep, params.key, img.height >> params.levels,
                                 img.width >> params.levels);
  std::printf("%s score=%.4f extracted=%d\n", ver.present ? "PRESENT" : "ABSENT",
              ver.presence_score, rep.extracted_count);
  return 0;
}

int cmd_attack(const CommonOpts& o, const std::string& spec_str) {
  const wmark::AttackSpec spec = wmark::AttackSpec::parse(spec_str);
  const wmark::Raster img = wmark::load_image(o.in_path);
  if (spec.kind == wmark::AttackKind::JPEG_CR) {
    auto res = wmark::jpeg_attack(img, spec.cr);
    std::fprintf(stderr, "jpeg attack: quality=%.1f achieved_cr=%.2f\n", res.quality,
                 res.achieved_cr);
    wmark::save_image(res.image, o.out_path);
  } else {
    wmark::save_image(wmark::apply_attack(img, spec), o.out_path);
  }
  return 0;
}

int cmd_metrics(const std::string& in_path, const std::string& ref_path) {
  const wmark::Raster a = wmark::load_image(in_path);
  const wmark::Raster b = wmark::load_image(ref_path);
  const double m = wmark::mse(a, b);
  const double p = wmark::psnr(a, b);
  const double c = wmark::corr(a, b);
  std::printf("mse=%.6f psnr=%.4f corr=%.6f\n", m, p, c);
  return 0;
}

int cmd_bench(const CommonOpts& o, const std::vector<std::string>& images,
              const std::string& csv_path, bool print_table) {
  wmark::BenchSuite suite;
  suite.image_paths = images;
  suite.base_params = make_params(o);
  const wmark::BenchResult result = wmark::run_bench(suite);
  for (const auto& m : result.missing_images)
    std::fprintf(stderr, "missing image skipped: %s\n", m.c_str());
  if (!csv_path.empty())
    wmark::write_text_file(csv_path, result.csv());
  else
    std::fputs(result.csv().c_str(), stdout);
  if (print_table) std::fputs(result.comparison_table().c_str(), stdout);
  if (!result.missing_images.empty())
    std::fprintf(stderr, "skipped %zu missing image(s)\n", result.missing_images.size());
  return 0;
}

int cmd_keygen() {
  std::random_device rd;
  std::uint64_t key = (std::uint64_t(rd()) << 32) ^ rd();
  std::printf("%" PRIu64 "\n", key);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"blind DWT-domain image watermarking toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string spec_str, ref_path, csv_path;
  std::vector<std::string> images;
  bool print_table = false;

  auto* embed = app.add_subcommand("embed", "embed a key-derived watermark");
  embed->add_option("--in", o.in_path, "input image (PNG/PPM/BMP)")->required();
  embed->add_option("--out", o.out_path, "output image (.png or .ppm)")->required();
  embed->add_option("--report", o.report_path, "embed report path");
  embed->add_flag("--auto-thresholds", o.auto_thresholds,
                  "derive T1/T2 from the host's own coefficients");
  add_param_flags(embed, &o);

  auto* extract = app.add_subcommand("extract", "blind watermark extraction");
  extract->add_option("--in", o.in_path, "input image")->required();
  extract->add_option("--report", o.report_path, "extraction report path");
  add_param_flags(extract, &o);

  auto* attack = app.add_subcommand("attack", "apply a robustness attack");
  attack->add_option("--in", o.in_path, "input image")->required();
  attack->add_option("--out", o.out_path, "output image")->required();
  attack->add_option("--spec", spec_str, "attack spec, e.g. jpeg:cr=15")->required();

  auto* metrics = app.add_subcommand("metrics", "image quality metrics");
  metrics->add_option("--in", o.in_path, "image A")->required();
  metrics->add_option("--ref", ref_path, "image B")->required();

  auto* bench = app.add_subcommand("bench", "run the robustness grid");
  bench->add_option("--images", images, "host image paths")->required()->expected(-1);
  bench->add_option("--csv", csv_path, "CSV output path (stdout if omitted)");
  bench->add_flag("--table", print_table, "print YCbCr-vs-RGB comparison table");
  add_param_flags(bench, &o);

  auto* keygen = app.add_subcommand("keygen", "generate a random 64-bit key");

  CLI11_PARSE(app, argc, argv);

  try {
    if (embed->parsed()) return cmd_embed(o);
    if (extract->parsed()) return cmd_extract(o);
    if (attack->parsed()) return cmd_attack(o, spec_str);
    if (metrics->parsed()) return cmd_metrics(o.in_path, ref_path);
    if (bench->parsed()) return cmd_bench(o, images, csv_path, print_table);
    if (keygen->parsed()) return cmd_keygen();
  } catch (const wmark::io_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const wmark::size_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDims;
  } catch (const wmark::spec_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitSpec;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
