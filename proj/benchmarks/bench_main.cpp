#include <benchmark/benchmark.h>

#include "pachner/skeleton.hpp"
#include "pachner/triangulation.hpp"

namespace {

const char* kTwoTet =
    "tri 2\n0: 1:0123 bdry bdry bdry\n1: 0:0123 bdry bdry bdry\n";

void BM_ParseSerialize(benchmark::State& state) {
    for (auto _ : state) {
        auto t = pachner::parse_triangulation(kTwoTet);
        benchmark::DoNotOptimize(pachner::serialize(t));
    }
}
BENCHMARK(BM_ParseSerialize);

void BM_Skeleton(benchmark::State& state) {
    const auto t = pachner::parse_triangulation(kTwoTet);
    for (auto _ : state) benchmark::DoNotOptimize(pachner::compute_skeleton(t));
}
BENCHMARK(BM_Skeleton);

}  // namespace

BENCHMARK_MAIN();
