#include <benchmark/benchmark.h>

#include <tropteich/canonical.hpp>
#include <tropteich/enumerate.hpp>

namespace {

void BM_enumerate(benchmark::State& state) {
    const int genus = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(tropteich::enumerate_stable_graphs(genus));
}
BENCHMARK(BM_enumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_canonical_form(benchmark::State& state) {
    tropteich::WeightedGraph g = tropteich::theta_graph();
    for (auto _ : state)
        benchmark::DoNotOptimize(tropteich::canonical_form(g));
}
BENCHMARK(BM_canonical_form);

void BM_automorphisms(benchmark::State& state) {
    tropteich::WeightedGraph g = tropteich::dumbbell_graph();
    for (auto _ : state)
        benchmark::DoNotOptimize(tropteich::automorphisms(g));
}
BENCHMARK(BM_automorphisms);

void BM_contraction_poset(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(tropteich::contraction_poset(2));
}
BENCHMARK(BM_contraction_poset)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
