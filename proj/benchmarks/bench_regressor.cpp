#include <benchmark/benchmark.h>

#include "surfit/regressor.hpp"
#include "surfit/rng.hpp"

using namespace surfit;

// Forward pass of the default network on a full-size input.
static void BM_MlpForward(benchmark::State& state) {
    MlpConfig c;
    c.seed = 1;
    const MlpModel m = init_model(c);
    std::mt19937_64 rng = make_stream(3, 0);
    std::vector<float> x(static_cast<std::size_t>(c.input_dim));
    for (float& v : x) v = static_cast<float>(uniform_open01(rng));
    for (auto _ : state) benchmark::DoNotOptimize(forward(m, x));
}
BENCHMARK(BM_MlpForward)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
