#include <benchmark/benchmark.h>

#include "agpolar/channel.hpp"
#include "agpolar/curves.hpp"
#include "agpolar/kernel.hpp"
#include "agpolar/metrics.hpp"
#include "agpolar/oesterle.hpp"
#include "agpolar/study.hpp"

using namespace agpolar;

static void BM_BuildSuzukiKernel(benchmark::State& state) {
    const CurveSpec spec = curve_spec(CurveFamily::suzuki, 2);
    const Field field = spec.field();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_kernel(spec, field));
    }
}
BENCHMARK(BM_BuildSuzukiKernel);

static void BM_ExactProfileHermitianBinary(benchmark::State& state) {
    const KernelMatrix B = descend_binary(build_kernel(curve_spec(CurveFamily::hermitian, 2), Field(2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_profile(B, 1 << 16));
    }
}
BENCHMARK(BM_ExactProfileHermitianBinary);

static void BM_ErasureCensus(benchmark::State& state) {
    const KernelMatrix K =
        build_kernel(curve_spec(CurveFamily::rational, 0, static_cast<int>(state.range(0))),
                     Field(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(erasure_census(K));
    }
}
BENCHMARK(BM_ErasureCensus)->Arg(3)->Arg(4);

static void BM_OesterleSolve(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(oesterle(256, 393216));
    }
}
BENCHMARK(BM_OesterleSolve);

static void BM_FixedNTable(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(table_fixed_n(3145728));
    }
}
BENCHMARK(BM_FixedNTable);

BENCHMARK_MAIN();
