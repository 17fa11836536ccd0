// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <random>

#include <benchmark/benchmark.h>

#include "rsl/preprocess.hpp"
#include "rsl/project.hpp"
#include "rsl/radarproc.hpp"
#include "rsl/refine.hpp"
#include "rsl/serial_reference.hpp"

using namespace rsl;

namespace {

const GridSpec kGrid{400, 160, 0.5};

LabeledCloud make_cloud(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<float> u(-60.0f, 60.0f), z(-2.0f, 8.0f);
  std::uniform_int_distribution<int> label(0, 3);
  LabeledCloud c;
  for (std::size_t i = 0; i < n; ++i) c.push_back({u(rng), u(rng), z(rng), 1.0f}, static_cast<SemanticClass>(label(rng)));
  return c;
}

// Trees with some building contamination, plus a facade.
LabeledCloud make_refine_cloud() {
  std::mt19937_64 rng(2);
  std::normal_distribution<float> n(0.0f, 0.7f);
  LabeledCloud c;
  for (int blob = 0; blob < 20; ++blob)
    for (int i = 0; i < 400; ++i)
      c.push_back({6.0f * blob + n(rng), (blob % 2 ? 8.0f : -8.0f) + n(rng), 4.0f + n(rng), 1.0f},
                  i % 10 == 0 ? SemanticClass::Building : SemanticClass::Vegetation);
  for (float x = 0; x < 120; x += 0.25f)
    for (float h = 0; h < 8; h += 0.4f) c.push_back({x, 15.0f, h, 1.0f}, SemanticClass::Vegetation);
  return c;
}

PolarScan make_scan(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<float> e(20.0f);
  PolarScan s = PolarScan::zeros(kGrid);
  for (auto& v : s.power) v = e(rng);
  return s;
}

const preprocess::FovSpec kFov{0.1, 2.0, 80.0};

void BM_FovParallel(benchmark::State& st) {
  const auto cloud = make_cloud(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(preprocess::fov_indices(cloud, kFov));
}
void BM_FovSerial(benchmark::State& st) {
  const auto cloud = make_cloud(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::fov_indices(cloud, kFov));
}

void BM_RasterizeParallel(benchmark::State& st) {
  const auto cloud = make_cloud(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(project::rasterize_class(cloud, SemanticClass::Building, kGrid));
}
void BM_RasterizeSerial(benchmark::State& st) {
  const auto cloud = make_cloud(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::rasterize_class(cloud, SemanticClass::Building, kGrid));
}

void BM_KStrongestParallel(benchmark::State& st) {
  const auto scan = make_scan(3);
  for (auto _ : st) benchmark::DoNotOptimize(radar::k_strongest(scan, 12, 0.3f));
}
void BM_KStrongestSerial(benchmark::State& st) {
  const auto scan = make_scan(3);
  for (auto _ : st) benchmark::DoNotOptimize(serial::k_strongest(scan, 12, 0.3f));
}

void BM_MseParallel(benchmark::State& st) {
  const auto a = make_scan(4), b = make_scan(5);
  for (auto _ : st) benchmark::DoNotOptimize(radar::mse(a, b));
}
void BM_MseSerial(benchmark::State& st) {
  const auto a = make_scan(4), b = make_scan(5);
  for (auto _ : st) benchmark::DoNotOptimize(serial::mse(a, b));
}

void BM_RefineParallel(benchmark::State& st) {
  const auto cloud = make_refine_cloud();
  for (auto _ : st) benchmark::DoNotOptimize(refine::refine_labels(cloud, {}));
}
void BM_RefineSerial(benchmark::State& st) {
  const auto cloud = make_refine_cloud();
  for (auto _ : st) benchmark::DoNotOptimize(serial::refine_labels(cloud, {}));
}

}  // namespace

BENCHMARK(BM_FovParallel)->Arg(10000)->Arg(1000000);
BENCHMARK(BM_FovSerial)->Arg(10000)->Arg(1000000);
BENCHMARK(BM_RasterizeParallel)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_RasterizeSerial)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_KStrongestParallel);
BENCHMARK(BM_KStrongestSerial);
BENCHMARK(BM_MseParallel);
BENCHMARK(BM_MseSerial);
BENCHMARK(BM_RefineParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RefineSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
