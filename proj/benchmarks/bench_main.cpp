#include "moncoh/bar.hpp"
#include "moncoh/cohomology.hpp"
#include "moncoh/cyclic.hpp"
#include "moncoh/zlinalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace moncoh;

static void BM_SmithNormalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> dist(-9, 9);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_IteratedBarBasis(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    auto mon = make_cyclic(2, 3);
    for (auto _ : state) {
        auto dga = iterated_bar(mon, r, r + 3);
        std::size_t cells = 0;
        for (int d = 0; d <= r + 3; ++d)
            for (const auto& w : dga->basis(d)) {
                benchmark::DoNotOptimize(dga->differential(w));
                ++cells;
            }
        state.counters["cells"] = static_cast<double>(cells);
    }
}
BENCHMARK(BM_IteratedBarBasis)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_CohomologyLevel3(benchmark::State& state) {
    auto mon = make_cyclic(1, 2);
    const auto a = HModule::constant(mon, FGAbelianGroup::cyclic(4));
    for (auto _ : state) benchmark::DoNotOptimize(cohomology_group(mon, 3, 5, a));
}
BENCHMARK(BM_CohomologyLevel3)->Unit(benchmark::kMillisecond);

static void BM_VerifyContraction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_contraction(1, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyContraction)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
