#include <benchmark/benchmark.h>

#include "polyslice/norm_space.hpp"
#include "polyslice/slice.hpp"

using namespace polyslice;

namespace {

HPolytope thm1_slice(int n, PolyhedralNormSpace& space) {
  const Scalar eps(1, 20);
  const Scalar r = eps / 4;
  space = make_space_ii(n, r);
  Vec f(static_cast<std::size_t>(n + 1));
  f[static_cast<std::size_t>(n)] = 1 + r;
  return make_slice(space, SliceSpec(f, eps / 10));
}

void BM_EnumerateSpaceTwoBall(benchmark::State& state) {
  const auto space = make_space_ii(static_cast<int>(state.range(0)), Scalar(1, 10));
  const auto ball = unit_ball(space);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(ball));
}
BENCHMARK(BM_EnumerateSpaceTwoBall)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateSpaceSevenSlice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto space = make_space_vii(n, default_omega(n));
  const auto p = make_slice(space, SliceSpec(Vec::unit(static_cast<std::size_t>(n), 0), Scalar(1, 20)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(p));
}
BENCHMARK(BM_EnumerateSpaceSevenSlice)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SliceDiameter(benchmark::State& state) {
  auto space = make_space_ii(1, Scalar(1, 10));
  const auto p = thm1_slice(static_cast<int>(state.range(0)), space);
  const auto v = enumerate_vertices(p);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(v, space));
  state.counters["vertices"] = static_cast<double>(v.size());
}
BENCHMARK(BM_SliceDiameter)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_Certificate(benchmark::State& state) {
  const Scalar r(1, 10);
  const auto space = make_space_ii(static_cast<int>(state.range(0)), r);
  const Vec g = Vec::unit(space.dim(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_certificate(space, g, Scalar(1, 2), r));
}
BENCHMARK(BM_Certificate)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SamplingOracle(benchmark::State& state) {
  auto space = make_space_ii(1, Scalar(1, 10));
  const auto v = enumerate_vertices(thm1_slice(3, space));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_diameter_lower_bound(v, space, static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_SamplingOracle)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
