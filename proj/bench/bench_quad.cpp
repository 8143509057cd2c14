#include "b2dunkl/harmonic.hpp"
#include "b2dunkl/quad.hpp"
#include "b2dunkl/weight.hpp"

#include <benchmark/benchmark.h>

using namespace b2dunkl;

namespace {

const WeightParams& bench_params()
{
    static const WeightParams wp = [] {
        WeightParams w;
        w.k0 = 0.3;
        w.k1 = 0.1;
        return w;
    }();
    return wp;
}

void BM_weight_sample(benchmark::State& state)
{
    const auto ex = state.range(0) ? Execution::parallel : Execution::serial;
    const auto grid = fundamental_grid(4096);
    for (auto _ : state)
        benchmark::DoNotOptimize(weight_sample(grid, bench_params(), false, ex));
}

void BM_gaussian_gram(benchmark::State& state)
{
    QuadSpec spec;
    spec.execution = state.range(0) ? Execution::parallel : Execution::serial;
    const Params p(Rational(3, 10), Rational(1, 10));
    std::vector<VPoly> fs;
    for (int n = 0; n <= 3; ++n)
        for (int i = 1; i <= (n == 0 ? 2 : 4); ++i)
            fs.push_back(basis_poly(n, i, p));
    for (auto _ : state)
        benchmark::DoNotOptimize(gaussian_form_gram(fs, fs, bench_params(), spec));
}

} // namespace

BENCHMARK(BM_weight_sample)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gaussian_gram)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
