#include <algorithm>
#include <string>

#include <benchmark/benchmark.h>

#include "surfit/distributions.hpp"
#include "surfit/rng.hpp"
#include "surfit/sur_model.hpp"

using namespace surfit;

static void BM_FitMleGev(benchmark::State& state) {
    std::mt19937_64 rng = make_stream(1, 0);
    const auto xs = sample(Distribution::from_gev({0.1, 20.0, 7.0}), static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(fit_mle(xs, Family::gev));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FitMleGev)->Arg(30)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

static void BM_FitMleFamily(benchmark::State& state) {
    const Family f = kAllFamilies[static_cast<std::size_t>(state.range(0))];
    std::mt19937_64 rng = make_stream(2, 0);
    auto xs = sample(Distribution::from_gev({0.1, 20.0, 7.0}), 30, rng);
    for (double& x : xs) x = std::max(x, 1.0);
    state.SetLabel(std::string(family_name(f)));
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(fit_mle(xs, f));
        } catch (const std::exception&) {
        }
    }
}
BENCHMARK(BM_FitMleFamily)->DenseRange(0, static_cast<int>(kAllFamilies.size()) - 1)->Unit(benchmark::kMicrosecond);

static void BM_FitSurLsq(benchmark::State& state) {
    const SurCurve c = sur_from_params({0.16, 19.55, 7.70});
    for (auto _ : state) benchmark::DoNotOptimize(fit_sur_lsq(c.values));
}
BENCHMARK(BM_FitSurLsq)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
