// Serial reference vs OpenMP scan kernel, and oracle solve cost.
// Run manually: ./build/bench/bench_scan

#include <benchmark/benchmark.h>

#include <cmath>

#include "scarf/numeric_oracle.hpp"
#include "scarf/scan.hpp"

namespace {

const scarf::ScarfParameters instance =
    scarf::from_parametrization(0, 0, std::sqrt(2.0), std::sqrt(5.0));

void BM_scan_serial(benchmark::State& state) {
    const scarf::ScanSpec spec{0.25, 7.0, int(state.range(0)),
                               scarf::ScanSpec::Spacing::linear};
    for (auto _ : state) {
        auto rows = scarf::scan(instance, spec, scarf::Execution::serial);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_scan_parallel(benchmark::State& state) {
    const scarf::ScanSpec spec{0.25, 7.0, int(state.range(0)),
                               scarf::ScanSpec::Spacing::linear};
    for (auto _ : state) {
        auto rows = scarf::scan(instance, spec, scarf::Execution::parallel);
        benchmark::DoNotOptimize(rows);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_oracle_solve(benchmark::State& state) {
    const auto sampled = scarf::sample_scarf(instance, -20.0, 20.0, int(state.range(0)));
    for (auto _ : state) {
        auto result = scarf::solve(sampled, 1.1);
        benchmark::DoNotOptimize(result);
    }
}

}  // namespace

BENCHMARK(BM_scan_serial)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_scan_parallel)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_oracle_solve)->Arg(1000)->Arg(4000)->Arg(16000);

BENCHMARK_MAIN();
