#include <benchmark/benchmark.h>

#include "fqirr/expsum.hpp"
#include "fqirr/irrcount.hpp"
#include "fqirr/oracle.hpp"
#include "fqirr/places.hpp"

using namespace fqirr;

namespace {

// q = 4, level m = state.range(0)
void BM_SSum(benchmark::State& state) {
  const auto ctx = FieldContext::make(2, 2);
  const ExtContext ext(ctx, static_cast<int>(state.range(0)));
  const Elem u = ctx.field().one(), v = ctx.gamma();
  for (auto _ : state) benchmark::DoNotOptimize(s_sum(ext, 3, u, v));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ext.size()));
}
BENCHMARK(BM_SSum)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_AllSums(benchmark::State& state) {
  const auto ctx = FieldContext::make(2, 3);
  const ExtContext ext(ctx, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_sums(ext, -1));
}
BENCHMARK(BM_AllSums)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_DirectPlaces(benchmark::State& state) {
  const auto ctx = FieldContext::make(3, 2);
  const ExtContext ext(ctx, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const DirectPlaceCounter counter(ext, -1);
    benchmark::DoNotOptimize(counter.count(ext.ambient().zero()));
  }
}
BENCHMARK(BM_DirectPlaces)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

void BM_ClosedPipeline(benchmark::State& state) {
  const auto ctx = FieldContext::make(2, 4);
  PipelineOptions po;
  po.policy = MethodPolicy::closed;
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_count(ctx, m, ctx.gamma(), 3, po));
}
BENCHMARK(BM_ClosedPipeline)->Arg(12)->Arg(30)->Arg(60);

void BM_IsIrreducible(benchmark::State& state) {
  const auto ctx = FieldContext::make(2, 3);
  const SmallField k(ctx);
  const auto m = static_cast<std::size_t>(state.range(0));
  SmallPoly f(m + 1, 0);
  f[m] = 1;
  f[0] = 3;
  f[1] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(f, k));
}
BENCHMARK(BM_IsIrreducible)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
