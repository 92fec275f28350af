// Serial reference vs OpenMP kernels for the exhaustive scans.

#include <benchmark/benchmark.h>

#include "divcrit/params.hpp"
#include "divcrit/tables.hpp"
#include "divcrit/verify.hpp"

namespace {

const divcrit::ParameterSet kSeventeen = divcrit::ParameterSet::from_wu(17, 10, 5, -1);

void BM_AuditSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(divcrit::equivalence_audit_serial(kSeventeen, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AuditParallel(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(divcrit::equivalence_audit(kSeventeen, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GenerateSerial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(divcrit::generate_serial(10, 2, state.range(0)));
}

void BM_GenerateParallel(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(divcrit::generate(10, 2, state.range(0)));
}

} // namespace

BENCHMARK(BM_AuditSerial)->Arg(100000)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Arg(100000)->Arg(10000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenerateParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
