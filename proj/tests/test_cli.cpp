#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "wmark/bench.hpp"
#include "wmark/image_io.hpp"
#include "wmark/report.hpp"

using namespace wmark;

namespace {

const std::string kTool = WMARK_TOOL;
const std::string kDataDir = WMARK_DATA_DIR;

std::filesystem::path tmp_dir() {
  auto d = std::filesystem::temp_directory_path() / "wmark_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

int run(const std::string& args) {
  const std::string cmd = kTool + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string capture(const std::string& args) {
  const auto out = tmp_dir() / "stdout.txt";
  const std::string cmd = kTool + " " + args + " >" + out.string() + " 2>/dev/null";
  (void)!std::system(cmd.c_str());
  return read_text_file(out.string());
}

}  // namespace

TEST_CASE("missing input file exits with the I/O code") {
  CHECK(run("embed --in /nope.ppm --out /tmp/x.ppm --key 1") == 2);
  CHECK(run("metrics --in /nope.ppm --ref /nope.ppm") == 2);
}

TEST_CASE("indivisible dimensions exit with the size code") {
  const auto bad = tmp_dir() / "odd.ppm";
  save_ppm(Raster(255, 255), bad.string());
  CHECK(run("embed --in " + bad.string() + " --out /tmp/x.ppm --key 1") == 3);
}

TEST_CASE("bad parameters and specs exit with the spec code") {
  const std::string host = kDataDir + "/chelsea.ppm";
  CHECK(run("embed --in " + host + " --out /tmp/x.ppm --t1 1700 --t2 1600") == 4);
  CHECK(run("embed --in " + host + " --out /tmp/x.ppm --mode luma") == 4);
  CHECK(run("attack --in " + host + " --out /tmp/x.ppm --spec blur:sigma=2") == 4);
  CHECK(run("attack --in " + host + " --out /tmp/x.ppm --spec rotate:angle=181") == 4);
}

TEST_CASE("unsupported output extension exits with the I/O code") {
  const std::string host = kDataDir + "/chelsea.ppm";
  CHECK(run("embed --in " + host + " --out /tmp/x.gif --key 1") == 2);
}

TEST_CASE("embed then extract reports a present watermark") {
  const auto dir = tmp_dir();
  const std::string host = kDataDir + "/chelsea.ppm";
  const std::string wm = (dir / "wm.png").string();
  const std::string rep = (dir / "embed.txt").string();
  CHECK(run("embed --in " + host + " --out " + wm + " --key 42 --report " + rep) == 0);

  EmbedReport embed_rep = parse_embed_report(read_text_file(rep));
  CHECK(embed_rep.embedded_count > 30);
  CHECK(embed_rep.psnr > 40.0);

  std::string out = capture("extract --in " + wm + " --key 42");
  CHECK(out.substr(0, 7) == "PRESENT");
  out = capture("extract --in " + wm + " --key 41");
  CHECK(out.substr(0, 6) == "ABSENT");
}

TEST_CASE("attack and metrics subcommands produce usable output") {
  const auto dir = tmp_dir();
  const std::string host = kDataDir + "/chelsea.ppm";
  const std::string attacked = (dir / "attacked.ppm").string();
  CHECK(run("attack --in " + host + " --out " + attacked + " --spec median:window=3") == 0);
  const std::string out = capture("metrics --in " + attacked + " --ref " + host);
  CHECK(out.find("mse=") != std::string::npos);
  CHECK(out.find("psnr=") != std::string::npos);
  CHECK(out.find("corr=") != std::string::npos);
}

TEST_CASE("bench skips missing images but still emits the grid") {
  const auto dir = tmp_dir();
  const std::string csv = (dir / "grid.csv").string();
  CHECK(run("bench --images " + kDataDir + "/chelsea.ppm /does/not/exist.ppm --key 42" +
            " --csv " + csv) == 0);
  const std::string text = read_text_file(csv);
  CHECK(text.find("image,mode,attack,") == 0);
  CHECK(text.find("chelsea,ycbcr-y,none,") != std::string::npos);
  CHECK(text.find("exist") == std::string::npos);
}

TEST_CASE("an empty bench suite yields a header-only CSV") {
  BenchSuite suite;
  BenchResult res = run_bench(suite);
  CHECK(res.rows.empty());
  CHECK(res.csv() ==
        "image,mode,attack,embedded_bits,extracted_bits,nc,error_rate_percent,psnr_db,corr\n");
}

TEST_CASE("bench error-rate column recomputes from the bit counts") {
  BenchSuite suite;
  suite.image_paths = {kDataDir + "/cat.ppm"};
  suite.base_params.key = 42;
  BenchResult res = run_bench(suite);
  REQUIRE_FALSE(res.rows.empty());
  for (const auto& r : res.rows) {
    REQUIRE(r.embedded_bits > 0);
    const double er = 100.0 * (r.embedded_bits - r.extracted_bits) / r.embedded_bits;
    CHECK(r.error_rate_percent == doctest::Approx(er).epsilon(1e-12));
  }
}

TEST_CASE("keygen prints a parseable integer") {
  const std::string out = capture("keygen");
  CHECK_FALSE(out.empty());
  CHECK_NOTHROW((void)std::stoull(out));
}
