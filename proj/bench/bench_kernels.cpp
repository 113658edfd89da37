#include <benchmark/benchmark.h>

#include "degcorr/ensemble.hpp"
#include "degcorr/transient.hpp"

using namespace degcorr;

namespace {

EdgeStateDistribution warm_state(int max_k) {
    TransientOptions opts;
    opts.max_k = max_k;
    opts.tail_epsilon = 2.0;
    return transient_run(Mode::directed, 2, 4, 200, opts);
}

void BM_TransientStepOpenMP(benchmark::State& state) {
    const auto d = warm_state(static_cast<int>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(transient_step(d, jobs));
    state.counters["cells"] = static_cast<double>(d.entries.cells().size());
}

void BM_TransientStepSerialReference(benchmark::State& state) {
    const auto d = warm_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::transient_step(d));
    state.counters["cells"] = static_cast<double>(d.entries.cells().size());
}

EnsembleParams ensemble(int replicas) {
    EnsembleParams p;
    p.growth = {2, 4, 20000, 1, 0};
    p.replicas = replicas;
    p.mode = Mode::undirected;
    return p;
}

void BM_ReplicasOpenMP(benchmark::State& state) {
    const auto p = ensemble(static_cast<int>(state.range(0)));
    const int jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_replicas(p, jobs));
}

void BM_ReplicasSerialReference(benchmark::State& state) {
    const auto p = ensemble(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::run_replicas(p));
}

}  // namespace

BENCHMARK(BM_TransientStepOpenMP)->ArgsProduct({{60, 250, 1000}, {1, 0}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TransientStepSerialReference)->Arg(60)->Arg(250)->Arg(1000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReplicasOpenMP)->Args({16, 1})->Args({16, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReplicasSerialReference)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
