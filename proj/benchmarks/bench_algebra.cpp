#include <benchmark/benchmark.h>

#include "rhoform/cohomology.hpp"
#include "rhoform/omega_derivation.hpp"
#include "rhoform/random_gen.hpp"

using namespace rhoform;

static void BM_ElementMul(benchmark::State& state) {
    auto pres = AlgebraPresentation::quantum_plane(static_cast<int>(state.range(0)));
    Rng rng(11);
    AlgebraElement u = random_element(pres, rng, 4, 5);
    AlgebraElement v = random_element(pres, rng, 4, 5);
    for (auto _ : state) {
        AlgebraElement r = u * v;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ElementMul)->Arg(2)->Arg(4);

static void BM_CocycleEval(benchmark::State& state) {
    Cocycle rho = Cocycle::quantum_plane(4);
    Rng rng(3);
    Grade a = random_grade(rho.group(), rng, 6);
    Grade b = random_grade(rho.group(), rng, 6);
    for (auto _ : state) {
        Scalar r = rho.eval(a, b);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CocycleEval);

static void BM_FormMul(benchmark::State& state) {
    auto pres = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(pres->group());
    Rng rng(17);
    Form a = random_form(pres, phi, rng, 2, 3, 3);
    Form b = random_form(pres, phi, rng, 2, 3, 3);
    for (auto _ : state) {
        Form r = a * b;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_FormMul);

static void BM_Contraction(benchmark::State& state) {
    auto pres = AlgebraPresentation::quantum_plane(2);
    GradedUnitHom phi = GradedUnitHom::trivial(pres->group());
    FieldValuedForm id = FieldValuedForm::identity(pres, phi);
    Rng rng(23);
    Form w = random_form(pres, phi, rng, 3, 3, 3);
    for (auto _ : state) {
        Form r = contract(id, w);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Contraction);

static void BM_BettiSlice(benchmark::State& state) {
    auto pres = AlgebraPresentation::clock_shift(static_cast<int>(state.range(0)));
    GradedUnitHom phi = GradedUnitHom::trivial(pres->group());
    Grade zero = Grade::zero(pres->group());
    for (auto _ : state) {
        BettiResult r = betti_numbers(pres, phi, zero, 2);
        benchmark::DoNotOptimize(r.betti);
    }
}
BENCHMARK(BM_BettiSlice)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
