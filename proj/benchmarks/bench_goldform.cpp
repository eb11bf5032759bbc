#include <random>

#include <benchmark/benchmark.h>

#include "goldform/builders.hpp"
#include "goldform/two_form.hpp"
#include "goldform/verify.hpp"

using namespace gf;

namespace {

void BM_OmegaMatrix(benchmark::State& state) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    std::mt19937_64 rng(1);
    Point x = sample_point(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(omega_matrix(g.pair, g.cs, x));
}
BENCHMARK(BM_OmegaMatrix);

void BM_OmegaMatrixGenus3(benchmark::State& state) {
    Gamma2 g = build_multicontour(multicontour_g3_spec(static_cast<int>(state.range(0))));
    std::mt19937_64 rng(2);
    Point x = sample_point(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(omega_matrix(g.pair, g.cs, x));
}
BENCHMARK(BM_OmegaMatrixGenus3)->DenseRange(1, 4);

void BM_Closedness(benchmark::State& state) {
    Gamma2 g = build_gamma2(sep_g2_spec());
    std::mt19937_64 rng(3);
    Point x = sample_point(g, rng);
    Lift lift(g.cs);
    Tangent u = random_tangent(lift, rng), v = random_tangent(lift, rng), w = random_tangent(lift, rng);
    for (auto _ : state) benchmark::DoNotOptimize(closedness_residual(g.pair, x, u, v, w));
}
BENCHMARK(BM_Closedness);

void BM_Scenario(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_scenario("sep-g2", 42, 10, 1e-9));
}
BENCHMARK(BM_Scenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
