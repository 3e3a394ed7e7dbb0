// Microbenchmarks comparing the OpenMP kernels against their serial
// reference implementations, plus the determinant methods against each
// other. Not part of the test suite; build and run the dodgson_bench target
// directly.

#include <benchmark/benchmark.h>

#include "dodgson/det.hpp"
#include "dodgson/gen.hpp"
#include "dodgson/verify.hpp"

using namespace dodgson;

namespace {

IntMatrix bench_matrix(int n) { return gen_matrix_bits(n, 16, 12345); }

void BM_bareiss_serial(benchmark::State& state) {
    IntMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_det_serial(m));
}

void BM_bareiss_parallel(benchmark::State& state) {
    IntMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bareiss_det_parallel(m, 0));
}

void BM_condensation_step_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    IntMatrix cur = bench_matrix(n);
    IntMatrix prev = IntMatrix::constant(n + 1, n + 1, Int(1));
    for (auto _ : state) benchmark::DoNotOptimize(condensation_step(cur, prev));
}

void BM_condensation_step_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    IntMatrix cur = bench_matrix(n);
    IntMatrix prev = IntMatrix::constant(n + 1, n + 1, Int(1));
    for (auto _ : state) benchmark::DoNotOptimize(condensation_step_parallel(cur, prev, 0));
}

void BM_condensation_det_serial(benchmark::State& state) {
    IntMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    CondensationConfig cfg;
    cfg.record_layers = false;
    for (auto _ : state) benchmark::DoNotOptimize(condensation_det(m, cfg).value);
}

void BM_condensation_det_parallel(benchmark::State& state) {
    IntMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    CondensationConfig cfg;
    cfg.record_layers = false;
    cfg.threads = 0;
    for (auto _ : state) benchmark::DoNotOptimize(condensation_det(m, cfg).value);
}

void BM_leibniz_det(benchmark::State& state) {
    IntMatrix m = bench_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(leibniz_det(m));
}

void BM_class_weight_sum_serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(class_weight_sum(n, PairingClass::A));
}

void BM_class_weight_sum_parallel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(class_weight_sum_parallel(n, PairingClass::A, 0));
}

}  // namespace

BENCHMARK(BM_bareiss_serial)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_bareiss_parallel)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_condensation_step_serial)->Arg(32)->Arg(128);
BENCHMARK(BM_condensation_step_parallel)->Arg(32)->Arg(128);
BENCHMARK(BM_condensation_det_serial)->Arg(16)->Arg(32);
BENCHMARK(BM_condensation_det_parallel)->Arg(16)->Arg(32);
BENCHMARK(BM_leibniz_det)->Arg(6)->Arg(8);
BENCHMARK(BM_class_weight_sum_serial)->Arg(5)->Arg(6);
BENCHMARK(BM_class_weight_sum_parallel)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
