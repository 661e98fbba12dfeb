#include <benchmark/benchmark.h>

#include "surfit/metrics.hpp"

using namespace surfit;

static void BM_Bhattacharyya(benchmark::State& state) {
    const BhattacharyyaOptions o{static_cast<BhattacharyyaScheme>(state.range(0))};
    state.SetLabel(std::string(scheme_name(o.scheme)));
    const GevParams p{0.16, 19.55, 7.70}, q{0.10, 20.98, 8.99};
    for (auto _ : state) benchmark::DoNotOptimize(bhattacharyya(p, q, o));
}
BENCHMARK(BM_Bhattacharyya)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
