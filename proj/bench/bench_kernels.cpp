#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lebx/kernels.hpp"
#include "lebx/parallel.hpp"

namespace {

std::vector<double> batch(int d, int count) {
    std::mt19937_64 rng(1);
    std::exponential_distribution<double> e(1.0);
    std::vector<double> coords;
    for (int p = 0; p < count; ++p) {
        std::vector<double> c(d + 1);
        double s = 0.0;
        for (auto& v : c) s += (v = e(rng));
        for (auto v : c) coords.push_back(v / s);
    }
    return coords;
}

// range(0) = degree, range(1) = dimension.
void BM_Serial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
    const auto coords = batch(d, 4096);
    std::vector<double> out(4096);
    for (auto _ : state) {
        lebx::lebesgue_batch_serial(coords, d, n, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * 4096);
}

void BM_OpenMP(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
    const auto coords = batch(d, 4096);
    std::vector<double> out(4096);
    lebx::set_thread_count(0);
    for (auto _ : state) {
        lebx::lebesgue_batch(coords, d, n, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * 4096);
}

}  // namespace

BENCHMARK(BM_Serial)->Args({10, 1})->Args({10, 2})->Args({20, 2})->Args({40, 2})->Args({12, 3});
BENCHMARK(BM_OpenMP)->Args({10, 1})->Args({10, 2})->Args({20, 2})->Args({40, 2})->Args({12, 3});

BENCHMARK_MAIN();
