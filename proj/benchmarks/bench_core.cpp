#include <benchmark/benchmark.h>

#include "cstar/exact_constant.hpp"
#include "cstar/hermitian.hpp"
#include "cstar/module_space.hpp"
#include "cstar/rng.hpp"
#include "cstar/scan.hpp"

namespace {

cstar::CMatrix random_hermitian(int k, std::uint64_t seed) {
    cstar::Rng rng(seed);
    const cstar::CMatrix g = cstar::ginibre(k, rng);
    return 0.5 * (g + cstar::adjoint(g));
}

void bm_herm_eig(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const cstar::CMatrix a = random_hermitian(k, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cstar::herm_eig(a));
    }
}
BENCHMARK(bm_herm_eig)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void bm_abs_element(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    cstar::Rng rng(7);
    const cstar::CMatrix a = cstar::ginibre(k, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cstar::abs_element(a));
    }
}
BENCHMARK(bm_abs_element)->Arg(2)->Arg(4)->Arg(8);

void bm_ell12_margin(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    cstar::Rng rng(11);
    const cstar::ModuleVector x = cstar::random_module_vector(k, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cstar::ell12_margin(x));
    }
}
BENCHMARK(bm_ell12_margin)->Args({2, 4})->Args({4, 8})->Args({8, 16});

void bm_exact_constant(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    cstar::Rng rng(13);
    const cstar::ModuleVector x = cstar::random_module_vector(k, n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cstar::verify_exact_constant_identity(x));
    }
}
BENCHMARK(bm_exact_constant)->Args({2, 4})->Args({4, 8});

void bm_scan_row(benchmark::State& state) {
    cstar::ScanConfig cfg;
    cfg.seed = 3;
    int trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            cstar::scan_one(static_cast<int>(state.range(0)),
                            static_cast<int>(state.range(1)), trial++, cfg));
    }
}
BENCHMARK(bm_scan_row)->Args({2, 4})->Args({4, 8});

}  // namespace

BENCHMARK_MAIN();
