#include <benchmark/benchmark.h>

#include "rhoform/random_gen.hpp"
#include "rhoform/scalar.hpp"

using namespace rhoform;

static void BM_ScalarMul(benchmark::State& state) {
    Rng rng(5);
    std::vector<Scalar> pool;
    for (int i = 0; i < 64; ++i) pool.push_back(random_scalar(rng, 4));
    size_t i = 0;
    for (auto _ : state) {
        Scalar r = pool[i % pool.size()] * pool[(i + 7) % pool.size()];
        benchmark::DoNotOptimize(r);
        ++i;
    }
}
BENCHMARK(BM_ScalarMul);

static void BM_ScalarFractionAdd(benchmark::State& state) {
    Scalar a = (Scalar::one() + Scalar::q_power(1)) / (Scalar::one() - Scalar::q_power(1));
    Scalar b = Scalar::q_power(-2) / (Scalar::one() + Scalar::q_power(3));
    for (auto _ : state) {
        Scalar r = a + b;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ScalarFractionAdd);

static void BM_CyclotomicInverse(benchmark::State& state) {
    Scalar e = Scalar::eps_power(12, 1) + Scalar(2);
    for (auto _ : state) {
        Scalar r = e.inverse();
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CyclotomicInverse);

BENCHMARK_MAIN();
