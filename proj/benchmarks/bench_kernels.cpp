#include "photondual/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace photondual;

namespace {

ComplexMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

void BM_permanent(benchmark::State& state) {
  const ComplexMatrix m = random_matrix(static_cast<int>(state.range(0)), 31);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
}
BENCHMARK(BM_permanent)->DenseRange(4, 16, 4);

void BM_determinant(benchmark::State& state) {
  const ComplexMatrix m = random_matrix(static_cast<int>(state.range(0)), 32);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_determinant)->Arg(8)->Arg(16);

void BM_immanant_hook(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ComplexMatrix m = random_matrix(n, 33);
  const Partition lambda({n - 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(immanant(m, lambda));
}
BENCHMARK(BM_immanant_hook)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
