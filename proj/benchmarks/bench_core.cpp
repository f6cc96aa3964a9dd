#include <benchmark/benchmark.h>

#include <vector>

#include "gsee/conv_eval.hpp"
#include "gsee/filters.hpp"
#include "gsee/hadamard.hpp"

namespace {

using namespace gsee;

SpectralMeasure five_levels() {
    return SpectralMeasure({0.30, 0.40, 0.55, 0.70, 0.85},
                           {0.6, 0.15, 0.10, 0.10, 0.05});
}

void bm_signal(benchmark::State& state) {
    SpectralMeasure p = five_levels();
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(signal(p, t));
        t += 0.001;
    }
}
BENCHMARK(bm_signal);

void bm_sampler_draw(benchmark::State& state) {
    GaussianDerivativeFilter filter(0.02, 60.0);
    RandomStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(filter.sample(rng));
    }
}
BENCHMARK(bm_sampler_draw);

void bm_hadamard_test(benchmark::State& state) {
    SpectralMeasure p = five_levels();
    RandomStream rng(2, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_hadamard(p, 17.3, HadamardBasis::real, rng));
    }
}
BENCHMARK(bm_hadamard_test);

void bm_collect(benchmark::State& state) {
    SpectralMeasure p = five_levels();
    SpectralSamplingBackend backend(p);
    GaussianDerivativeFilter filter(0.02, 60.0);
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            FourierSampleSet::collect(filter, backend, n, 42));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_collect)->Arg(8192)->Arg(65536);

void bm_eval_grid(benchmark::State& state) {
    SpectralMeasure p = five_levels();
    SpectralSamplingBackend backend(p);
    GaussianDerivativeFilter filter(0.02, 60.0);
    FourierSampleSet set = FourierSampleSet::collect(filter, backend, 65536, 42);
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    std::vector<double> xs(m);
    for (std::size_t j = 0; j < m; ++j) {
        xs[j] = 0.295 + 0.001 * static_cast<double>(j);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(set.eval_grid(xs));
    }
    state.SetItemsProcessed(state.iterations() * set.size() * m);
}
BENCHMARK(bm_eval_grid)->Arg(11)->Arg(64);

void bm_eval_point(benchmark::State& state) {
    SpectralMeasure p = five_levels();
    SpectralSamplingBackend backend(p);
    GaussianDerivativeFilter filter(0.02, 60.0);
    FourierSampleSet set = FourierSampleSet::collect(filter, backend, 65536, 42);
    double x = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(set.eval(x));
        x += 1e-6;
    }
    state.SetItemsProcessed(state.iterations() * set.size());
}
BENCHMARK(bm_eval_point);

}  // namespace

BENCHMARK_MAIN();
