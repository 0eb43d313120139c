#include <benchmark/benchmark.h>

#include "chainbell/chain.hpp"
#include "chainbell/lhv.hpp"
#include "chainbell/sampler.hpp"

namespace {

void BM_EvaluateChain(benchmark::State& state) {
    const chainbell::ChainScenario scenario{static_cast<int>(state.range(0)),
                                            static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(chainbell::evaluateChain(scenario));
}
BENCHMARK(BM_EvaluateChain)->Args({3, 2})->Args({5, 10})->Args({12, 20});

void BM_CertifyClassicalBound(benchmark::State& state) {
    const chainbell::ChainScenario scenario{static_cast<int>(state.range(0)),
                                            static_cast<int>(state.range(1))};
    for (auto _ : state)
        benchmark::DoNotOptimize(chainbell::certifyClassicalBound(scenario));
}
BENCHMARK(BM_CertifyClassicalBound)->Args({3, 3})->Args({4, 3})->Args({2, 8});

void BM_SampleJoint(benchmark::State& state) {
    const chainbell::SettingLadder ladder{3, 2, chainbell::ChainVariant::standard};
    const auto table = chainbell::jointTable(
        chainbell::MaxEntangledState{3},
        chainbell::pairEffectiveRotation(ladder, 0, 1));
    const std::uint64_t shots = state.range(0);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(chainbell::sampleJoint(table, shots, seed++));
    state.SetItemsProcessed(state.iterations() * shots);
}
BENCHMARK(BM_SampleJoint)->Arg(100'000)->Arg(1'000'000);

}  // namespace

BENCHMARK_MAIN();
