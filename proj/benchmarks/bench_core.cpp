#include <benchmark/benchmark.h>

#include "voa/divisor.hpp"
#include "voa/genfunc.hpp"
#include "voa/oracle.hpp"
#include "voa/registry.hpp"

using namespace voa;

namespace {

Insertion repeat(int l, int module, long long count) {
    Insertion ins = Insertion::empty(l);
    ins.add(module, count);
    return ins;
}

void BM_RankInsertions(benchmark::State& state) {
    const FaEngine engine(virasoro(4, 5));
    const Insertion ins = repeat(engine.size(), 1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(engine.rank(ins, 1));
}

void BM_RankGenus(benchmark::State& state) {
    const FaEngine engine(virasoro(4, 5));
    const Insertion ins = repeat(engine.size(), 1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(engine.rank(ins, state.range(0)));
}

void BM_ResolventEntry(benchmark::State& state) {
    const FaEngine engine(virasoro(2, 2 * state.range(0) + 1));
    const IntMat id = IntMat::identity(engine.size());
    for (auto _ : state)
        benchmark::DoNotOptimize(resolvent_entry(id, engine.fusion_entries(0), 0, 0));
}

void BM_OracleChain(benchmark::State& state) {
    const VoaSpec spec = virasoro(3, 4);
    const Insertion ins = repeat(spec.size(), spec.size() - 1, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_caterpillar(spec, ins, 1));
}

void BM_DivisorClass(benchmark::State& state) {
    const FaEngine engine(affine_sl2(2));
    const std::vector<int> ins(state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(c1(engine, ins, 1));
}

}  // namespace

BENCHMARK(BM_RankInsertions)->Arg(8)->Arg(64)->Arg(512);
BENCHMARK(BM_RankGenus)->Arg(1)->Arg(16)->Arg(256);
BENCHMARK(BM_ResolventEntry)->DenseRange(2, 8, 2);
BENCHMARK(BM_OracleChain)->DenseRange(4, 8, 2);
BENCHMARK(BM_DivisorClass)->DenseRange(4, 8, 2);
BENCHMARK_MAIN();
