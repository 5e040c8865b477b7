#include <random>

#include <benchmark/benchmark.h>

#include "skewhecke/linalg.hpp"
#include "skewhecke/standard_contexts.hpp"

using namespace skh;

namespace {

ContextPtr s4_polynomials(int cap) {
  auto g = symmetric_group(4);
  return polynomial_fixture(g, subgroup_by_names(g, {"(12)", "(23)"}), cap);
}

void BM_ConvolveS3Polynomials(benchmark::State& state) {
  auto g = symmetric_group(3);
  auto ctx = polynomial_fixture(g, subgroup_by_names(g, {"(12)"}), static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  auto x = random_hecke(ctx, rng), y = random_hecke(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(x, y));
}
BENCHMARK(BM_ConvolveS3Polynomials)->Arg(1)->Arg(2)->Arg(3);

void BM_ConvolveS4Polynomials(benchmark::State& state) {
  auto ctx = s4_polynomials(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  auto x = random_hecke(ctx, rng), y = random_hecke(ctx, rng);
  for (auto _ : state) benchmark::DoNotOptimize(convolve(x, y));
}
BENCHMARK(BM_ConvolveS4Polynomials)->Arg(1)->Arg(2);

void BM_StructureConstants(benchmark::State& state) {
  auto ctx = s4_polynomials(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structure_constants(ctx));
}
BENCHMARK(BM_StructureConstants)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RowReduce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field q = Field::rationals();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Vector> rows(n, zero_vector(q, n));
  for (auto& r : rows)
    for (auto& x : r) x = q.from_int(d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(row_reduce(rows, n, q));
}
BENCHMARK(BM_RowReduce)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
BENCHMARK_MAIN();
