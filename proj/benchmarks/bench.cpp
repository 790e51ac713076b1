#include <benchmark/benchmark.h>

#include "entbounds/bounds.hpp"
#include "entbounds/decomposition.hpp"
#include "entbounds/measures.hpp"
#include "entbounds/random.hpp"

using namespace entbounds;

static void BM_PartialTrace(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const BipartiteSplit split(d, d);
    const QuantumState rho = random_density(d * d, d * d, {1, 0});
    for (auto _ : state)
        benchmark::DoNotOptimize(partial_trace(rho, split, Subsystem::A));
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(3)->Arg(4);

static void BM_Fidelity(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const QuantumState r1 = random_density(d, d, {2, 0});
    const QuantumState r2 = random_density(d, d, {2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(fidelity(r1, r2));
}
BENCHMARK(BM_Fidelity)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_TwoQubitConcurrence(benchmark::State& state) {
    const QuantumState rho = random_density(4, 4, {3, 0});
    for (auto _ : state) benchmark::DoNotOptimize(concurrence_two_qubit(rho));
}
BENCHMARK(BM_TwoQubitConcurrence);

static void BM_ProofChain(benchmark::State& state) {
    const BipartiteSplit split(2, 2);
    const QuantumState rho = random_density(4, 4, {4, 0});
    const Isometry v = random_isometry(16, 4, {4, 1});
    const Decomposition dec = from_isometry(rho, v);
    for (auto _ : state)
        benchmark::DoNotOptimize(proof_chain_check(dec, split));
}
BENCHMARK(BM_ProofChain);

static void BM_SearchRestart(benchmark::State& state) {
    const BipartiteSplit split(2, 2);
    const QuantumState rho = random_density(4, 4, {5, 0});
    SearchConfig cfg;
    cfg.restarts = 1;
    cfg.ensemble_size = 16;
    cfg.seed = {6, 0};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            minimize_average_concurrence(rho, split, cfg));
}
BENCHMARK(BM_SearchRestart)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
