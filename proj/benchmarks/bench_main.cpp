#include <benchmark/benchmark.h>

#include "ductflow/fvm.hpp"
#include "ductflow/riemann.hpp"
#include "ductflow/stationary.hpp"

using namespace ductflow;

namespace {

const GasConstants kGas(2.0);

SimConfig second_preset(int cells) {
    SimConfig cfg;
    cfg.cells = cells;
    cfg.t_end = 0.35;
    cfg.initial = {2.9, 3.0, {0.75, 5, 5, 1}, {1, 5, 5, 1}, {0.688168, 5.589, 2.3679, 1.3}};
    return cfg;
}

void BM_StationaryJump(benchmark::State& state) {
    const GasState anchor{1.0, 5.0, 5.0, 1.0};
    for (auto _ : state) benchmark::DoNotOptimize(stationary_jump(anchor, 1.3, kGas));
}
BENCHMARK(BM_StationaryJump);

void BM_SolveConstantArea(benchmark::State& state) {
    const GasState l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
    for (auto _ : state) benchmark::DoNotOptimize(solve_constant_area(l, r, kGas));
}
BENCHMARK(BM_SolveConstantArea);

void BM_SolveDuctResonant(benchmark::State& state) {
    const GasState l{1.5, 4.0, 10.0, 1.0}, r{1.63872, 1.9527, 18.6486, 1.5};
    for (auto _ : state) benchmark::DoNotOptimize(solve_duct(l, 1.0, r, 1.5, kGas));
}
BENCHMARK(BM_SolveDuctResonant)->Unit(benchmark::kMillisecond);

void BM_FvmStep(benchmark::State& state) {
    const SimConfig cfg = second_preset(static_cast<int>(state.range(0)));
    const SimGrid grid = initial_grid(cfg, kGas);
    for (auto _ : state) benchmark::DoNotOptimize(step(grid, cfg, kGas));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FvmStep)->Arg(250)->Arg(2000);

void BM_FvmRun(benchmark::State& state) {
    const SimConfig cfg = second_preset(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run(cfg, kGas));
}
BENCHMARK(BM_FvmRun)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
