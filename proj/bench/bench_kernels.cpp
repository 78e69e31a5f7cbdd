#include <random>

#include <benchmark/benchmark.h>

#include "polyassoc/complex.hpp"
#include "polyassoc/deformation.hpp"
#include "polyassoc/realization.hpp"
#include "polyassoc/visibility.hpp"
#include "random_polygons.hpp"

using namespace polyassoc;

namespace {

Polygon sample_polygon(int n) {
  std::mt19937 rng(1000 + n);
  return testing_support::random_simple_polygon(rng, n, true, 200);
}

Polygon sample_star(int n) {
  std::mt19937 rng(2000 + n);
  return testing_support::random_star_polygon(rng, n, 60);
}

Execution mode(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_Visibility(benchmark::State& state) {
  const Polygon p = sample_polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto d = mode(state) == Execution::serial ? detail::diagonals_serial(p) : detail::diagonals_parallel(p);
    benchmark::DoNotOptimize(d);
  }
}

void BM_Triangulations(benchmark::State& state) {
  const Polygon p = sample_polygon(static_cast<int>(state.range(0)));
  EnumerationOptions options;
  options.exec = mode(state);
  for (auto _ : state) {
    auto all = enumerate_triangulations(p, options);
    benchmark::DoNotOptimize(all);
  }
}

void BM_Complex(benchmark::State& state) {
  const Polygon p = sample_polygon(static_cast<int>(state.range(0)));
  EnumerationOptions options;
  options.exec = mode(state);
  for (auto _ : state) {
    auto k = build_complex(p, options);
    benchmark::DoNotOptimize(k);
  }
}

void BM_HeightCertificates(benchmark::State& state) {
  const Polygon p = sample_polygon(static_cast<int>(state.range(0)));
  const auto all = enumerate_triangulations(p);
  for (auto _ : state) {
    auto c = mode(state) == Execution::serial ? detail::certificates_serial(p, all)
                                              : detail::certificates_parallel(p, all);
    benchmark::DoNotOptimize(c);
  }
}

void BM_StarDeformation(benchmark::State& state) {
  const Polygon p = sample_star(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto s = star_deformation(p, std::nullopt, StarPath::InverseRadius, mode(state));
    benchmark::DoNotOptimize(s);
  }
}

}  // namespace

BENCHMARK(BM_Visibility)->ArgsProduct({{16, 32, 64}, {0, 1}})->ArgNames({"n", "omp"});
BENCHMARK(BM_Triangulations)->ArgsProduct({{10, 12}, {0, 1}})->ArgNames({"n", "omp"});
BENCHMARK(BM_Complex)->ArgsProduct({{9, 10}, {0, 1}})->ArgNames({"n", "omp"});
BENCHMARK(BM_HeightCertificates)->ArgsProduct({{8, 9}, {0, 1}})->ArgNames({"n", "omp"});
BENCHMARK(BM_StarDeformation)->ArgsProduct({{8, 12}, {0, 1}})->ArgNames({"n", "omp"});

BENCHMARK_MAIN();
