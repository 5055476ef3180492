#include <benchmark/benchmark.h>

#include "ferrers/oracles.hpp"
#include "ferrers/rook.hpp"
#include "ferrers/salient.hpp"
#include "ferrers/transforms.hpp"
#include "ferrers/wilf.hpp"

using namespace ferrers;

static void BM_enumerate_partitions(benchmark::State& state)
{
    for (auto _ : state) {
        auto all = enumerate_partitions(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(all);
    }
}
BENCHMARK(BM_enumerate_partitions)->Arg(20)->Arg(30);

static void BM_rook_numbers(benchmark::State& state)
{
    Partition mu = Partition::parse("12,11,9,9,8,6,5,5,3,2,1");
    for (auto _ : state) {
        auto v = rook_numbers(mu);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_rook_numbers);

static void BM_rook_numbers_by_placement(benchmark::State& state)
{
    Partition mu = Partition::parse("4,3,2,1");
    for (auto _ : state) {
        auto v = rook_numbers_by_placement(mu);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_rook_numbers_by_placement);

static void BM_rook_classes(benchmark::State& state)
{
    for (auto _ : state) {
        auto classes = rook_classes(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_rook_classes)->Arg(12)->Arg(16);

static void BM_i1_class(benchmark::State& state)
{
    Partition mu = Partition::parse("4,3,3,2,2,2");
    for (auto _ : state) {
        auto cls = i1_class(mu);
        benchmark::DoNotOptimize(cls);
    }
}
BENCHMARK(BM_i1_class);

static void BM_count_containing(benchmark::State& state)
{
    Partition mu = Partition::parse("2,1");
    for (auto _ : state) {
        auto c = count_containing(static_cast<int>(state.range(0)), mu);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_count_containing)->Arg(12)->Arg(16);

static void BM_max_nested_weight_by_search(benchmark::State& state)
{
    Partition mu = Partition::parse("6,5,5,5,4,2");
    for (auto _ : state) {
        auto w = max_nested_weight_by_search(mu, 3);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_max_nested_weight_by_search);

BENCHMARK_MAIN();
