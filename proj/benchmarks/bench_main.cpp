#include <benchmark/benchmark.h>

#include "discarr/discriminantal.hpp"
#include "discarr/gallery.hpp"

using namespace discarr;

static void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto fd = FieldDescriptor::cyclotomic(static_cast<int>(state.range(0)));
  const FieldElement z = FieldElement::generator(fd);
  const FieldElement a = z + FieldElement::one(fd), b = z.pow(3) - z;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(24)->Arg(40);

static void BM_QuadralSweep(benchmark::State& state) {
  const Arrangement a = regular_polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quadral_points(a));
}
BENCHMARK(BM_QuadralSweep)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_QuintupleSweep(benchmark::State& state) {
  const Arrangement a = regular_polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quintuple_points(a));
}
BENCHMARK(BM_QuintupleSweep)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);

static void BM_Good6Sweep(benchmark::State& state) {
  const Arrangement a = dodecahedral();
  for (auto _ : state) benchmark::DoNotOptimize(good6_points(a));
}
BENCHMARK(BM_Good6Sweep);

static void BM_IntersectionLattice(benchmark::State& state) {
  const auto d = build_discriminantal(state.range(0) == 2 ? octahedral() : dodecahedral());
  for (auto _ : state) benchmark::DoNotOptimize(intersection_lattice(d));
}
BENCHMARK(BM_IntersectionLattice)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_ClassifyType(benchmark::State& state) {
  const PartitionType& nu = PartitionType::all()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(nu.to_string());
  for (auto _ : state) benchmark::DoNotOptimize(classify_type(nu));
}
BENCHMARK(BM_ClassifyType)->DenseRange(0, 10)->Unit(benchmark::kMicrosecond);

static void BM_TranslateSolver(benchmark::State& state) {
  const Arrangement a = crapo();
  const IndexFamily fam({{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(translate_solver(a, fam));
}
BENCHMARK(BM_TranslateSolver);
BENCHMARK_MAIN();
