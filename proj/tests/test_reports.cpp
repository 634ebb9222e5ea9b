#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "wmark/report.hpp"

using namespace wmark;

TEST_CASE("embed report round trips through text") {
  EmbedReport rep;
  rep.embedded_count = 3;
  rep.psnr = 46.123456;
  rep.corr = 0.999123;
  rep.zero_payload_warning = false;
  rep.positions = {{0, 5}, {7, 7}, {31, 2}};

  std::string text = serialize_embed_report(rep);
  CHECK(text.find("embedded_count = 3\n") != std::string::npos);
  CHECK(text.find("psnr = 46.123456\n") != std::string::npos);

  EmbedReport back = parse_embed_report(text);
  CHECK(back.embedded_count == rep.embedded_count);
  CHECK(back.psnr == doctest::Approx(rep.psnr));
  CHECK(back.corr == doctest::Approx(rep.corr));
  CHECK(back.zero_payload_warning == rep.zero_payload_warning);
  CHECK(back.positions == rep.positions);
}

TEST_CASE("extraction report round trips through text") {
  ExtractionReport rep;
  rep.recovered[{0, 5}] = 1;
  rep.recovered[{7, 7}] = 0;
  rep.extracted_count = 2;
  rep.nc = 1.0;
  rep.error_rate_percent = 7.947020;

  ExtractionReport back = parse_extraction_report(serialize_extraction_report(rep));
  CHECK(back.recovered == rep.recovered);
  CHECK(back.extracted_count == 2);
  CHECK(back.nc == doctest::Approx(1.0));
  REQUIRE(back.error_rate_percent.has_value());
  CHECK(*back.error_rate_percent == doctest::Approx(7.94702));
}

TEST_CASE("optional error rate is omitted when unset") {
  ExtractionReport rep;
  rep.extracted_count = 0;
  std::string text = serialize_extraction_report(rep);
  CHECK(text.find("error_rate_percent") == std::string::npos);
  CHECK_FALSE(parse_extraction_report(text).error_rate_percent.has_value());
}

TEST_CASE("malformed lines are io errors") {
  CHECK_THROWS_AS(parse_embed_report("what is this\n"), io_error);
  CHECK_THROWS_AS(parse_embed_report("positions:\nnot-a-pair\n"), io_error);
  CHECK_THROWS_AS(parse_extraction_report("nonsense\n"), io_error);
}

TEST_CASE("text file helpers round trip and fail loudly") {
  const std::string path =
      (std::filesystem::temp_directory_path() / "wmark_report_test.txt").string();
  write_text_file(path, "a = 1\n");
  CHECK(read_text_file(path) == "a = 1\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file(path), io_error);
  CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.txt", "y"), io_error);
}
