// Micro-benchmarks for the exact-arithmetic hot paths: Hessian expansion,
// the family forward map, inversion, parsing/printing, and pullbacks.
#include <benchmark/benchmark.h>

#include "hessmap/formio.hpp"
#include "hessmap/hessian.hpp"
#include "hessmap/inversion.hpp"
#include "hessmap/sampling.hpp"

using namespace hessmap;

namespace {

Form dense_form(const Ring& ring, unsigned degree, std::uint64_t seed) {
    SampleRng rng(seed);
    return sample_form(rng, ring, degree);
}

void BM_HessianTernaryQuartic(benchmark::State& state) {
    const Form f = dense_form(Ring::ternary(), 4, 42);
    for (auto _ : state) {
        Form h = hessian(f);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HessianTernaryQuartic);

void BM_HessianQuaternaryCubic(benchmark::State& state) {
    const Form f = dense_form(Ring::quaternary(), 3, 42);
    for (auto _ : state) {
        Form h = hessian(f);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_HessianQuaternaryCubic);

void BM_ForwardQuartic(benchmark::State& state) {
    const QuarticParams p{1, -2, Rational(3, 7), 4, 5, -6};
    for (auto _ : state) {
        CoeffTable t = forward_map(p);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ForwardQuartic);

void BM_InvertQuartic(benchmark::State& state) {
    const CoeffTable t = forward_map(QuarticParams{1, 2, 3, 4, 5, 6});
    for (auto _ : state) {
        InversionResult r = invert_quartic(t);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_InvertQuartic);

void BM_InvertCubic(benchmark::State& state) {
    const CoeffTable t = forward_map(CubicSurfParams{2, -3, Rational(1, 2), 5});
    for (auto _ : state) {
        InversionResult r = invert_cubic3(t);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_InvertCubic);

void BM_PrintParseRoundtrip(benchmark::State& state) {
    const Form h = hessian(dense_form(Ring::ternary(), 4, 42));
    const std::string text = print_form(h);
    for (auto _ : state) {
        Form back = parse_form(text, Ring::ternary());
        benchmark::DoNotOptimize(back);
    }
}
BENCHMARK(BM_PrintParseRoundtrip);

void BM_Pullback(benchmark::State& state) {
    const Form f = dense_form(Ring::ternary(), 4, 42);
    SampleRng rng(43);
    const LinearChange a = sample_invertible(rng, 3);
    for (auto _ : state) {
        Form g = pullback(f, a);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_Pullback);

void BM_SymbolicSystemDeterminant(benchmark::State& state) {
    for (auto _ : state) {
        DeltaReport report = delta_discrepancy_report();
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_SymbolicSystemDeterminant);

} // namespace

BENCHMARK_MAIN();
