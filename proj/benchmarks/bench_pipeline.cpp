#include <benchmark/benchmark.h>

#include <random>

#include "wmark/attacks.hpp"
#include "wmark/dwt.hpp"
#include "wmark/image_io.hpp"
#include "wmark/watermark.hpp"

namespace {

wmark::Plane random_plane(int w, int h) {
  wmark::Plane p(w, h);
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> d(0.0, 255.0);
  for (auto& v : p.v) v = d(rng);
  return p;
}

const wmark::Raster& host_image() {
  static const wmark::Raster img =
      wmark::load_image(std::string(WMARK_DATA_DIR) + "/chelsea.ppm");
  return img;
}

void BM_ForwardDwt(benchmark::State& state) {
  const wmark::Plane p = random_plane(256, 256);
  const auto& fb = wmark::FilterBank::spline_7_9();
  for (auto _ : state) benchmark::DoNotOptimize(wmark::forward_dwt2(p, 3, fb));
}
BENCHMARK(BM_ForwardDwt);

void BM_RoundTripDwt(benchmark::State& state) {
  const wmark::Plane p = random_plane(256, 256);
  const auto& fb = wmark::FilterBank::spline_7_9();
  for (auto _ : state)
    benchmark::DoNotOptimize(wmark::inverse_dwt2(wmark::forward_dwt2(p, 3, fb), fb));
}
BENCHMARK(BM_RoundTripDwt);

void BM_Embed(benchmark::State& state) {
  wmark::EmbedParams params;
  params.key = 42;
  for (auto _ : state) benchmark::DoNotOptimize(wmark::embed(host_image(), params));
}
BENCHMARK(BM_Embed);

void BM_Extract(benchmark::State& state) {
  wmark::EmbedParams params;
  params.key = 42;
  const wmark::Raster wm = wmark::embed(host_image(), params).first;
  for (auto _ : state) benchmark::DoNotOptimize(wmark::extract(wm, params));
}
BENCHMARK(BM_Extract);

void BM_JpegAttack(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wmark::jpeg_attack(host_image(), double(state.range(0))));
}
BENCHMARK(BM_JpegAttack)->Arg(5)->Arg(20);

void BM_MedianAttack(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(wmark::median_attack(host_image(), int(state.range(0))));
}
BENCHMARK(BM_MedianAttack)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
