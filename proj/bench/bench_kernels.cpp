// Serial against OpenMP for the per-weight kernels.  QDIV_THREADS caps the thread count.

#include <benchmark/benchmark.h>

#include "qdiv/derham.hpp"
#include "qdiv/loewy.hpp"

using namespace qdiv;

namespace {

const RootSpec L3(3, RootOrder::Odd);

ExecPolicy policy_of(const benchmark::State& st) { return st.range(0) ? ExecPolicy::Parallel : ExecPolicy::Serial; }

void BM_TraceRadical(benchmark::State& st) {
    ComponentSpace c(Truncation{3, 2}, 7, L3);
    const GradedAlgebra B = image_algebra(c.module());
    for (auto _ : st) benchmark::DoNotOptimize(trace_radical(c.module(), B, policy_of(st)).dim());
}

void BM_Commutant(benchmark::State& st) {
    ComponentSpace c(Truncation{3, 2}, 7, L3);
    for (auto _ : st) benchmark::DoNotOptimize(commutant(c.module(), policy_of(st)).dim());
}

void BM_SocleSeries(benchmark::State& st) {
    ComponentSpace c(Truncation{3, 2}, 9, L3);
    for (auto _ : st) benchmark::DoNotOptimize(socle_series(c.module(), policy_of(st)).size());
}

void BM_Cohomology(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(cohomology(Truncation{3, 2}, L3, policy_of(st)).ok);
}

void BM_DSquare(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(d_square_check(Truncation{3, 2}, L3, policy_of(st)).checked);
}

void BM_Exactness(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(untruncated_exactness(3, L3, 6, policy_of(st)).blocks_checked);
}

}  // namespace

// arg 0 = serial reference, 1 = parallel
BENCHMARK(BM_TraceRadical)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Commutant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SocleSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Cohomology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DSquare)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Exactness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
