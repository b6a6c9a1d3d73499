#include "photondual/evolve.hpp"
#include "photondual/measure.hpp"
#include "photondual/search.hpp"

#include <benchmark/benchmark.h>

using namespace photondual;

namespace {

void BM_apply_filter(benchmark::State& state) {
  const Interferometer filter = canonical_filter();
  const double r = 1.0 / std::sqrt(2.0);
  const PureState input = partially_distinguishable(3, Complex(r, 0), Complex(r, 0));
  for (auto _ : state) benchmark::DoNotOptimize(apply(filter, input));
}
BENCHMARK(BM_apply_filter);

void BM_symbolic_apply_filter(benchmark::State& state) {
  const Interferometer filter = canonical_filter();
  const double r = 1.0 / std::sqrt(2.0);
  const PureState input = partially_distinguishable(3, Complex(r, 0), Complex(r, 0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_apply(filter, input));
}
BENCHMARK(BM_symbolic_apply_filter);

void BM_filter_pipeline(benchmark::State& state) {
  const Interferometer filter = canonical_filter();
  const PureState input = partially_distinguishable(3, Complex(0, 0), Complex(1, 0));
  for (auto _ : state) {
    const PostselectionResult post = postselect_vacuum(apply(filter, input), 0);
    benchmark::DoNotOptimize(hom_coincidence(post.conditional_state, 1, 2));
  }
}
BENCHMARK(BM_filter_pipeline);

void BM_search_restart(benchmark::State& state) {
  SearchSpec spec;
  spec.restarts = 1;
  spec.max_iters = 500;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    spec.seed = ++seed;
    benchmark::DoNotOptimize(search(spec));
  }
}
BENCHMARK(BM_search_restart)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
