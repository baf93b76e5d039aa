// Microbenchmarks for the hot paths: the product kernel as mode counts grow,
// coboundary evaluation, and the two sigma-extraction paths.

#include <starprod/starprod.hpp>

#include <benchmark/benchmark.h>

#include <cstdint>

namespace {

using namespace starprod;

Cocycle bench_cocycle(int m) {
    return Cocycle(random_cocycle(m, 42, 4, 43));
}

void BM_StarProduct(benchmark::State& state) {
    const int m = 2;
    const int modes = static_cast<int>(state.range(0));
    const Cocycle alpha = bench_cocycle(m);
    const ModeField f = random_modefield(m, modes, 2.0, 101);
    const ModeField g = random_modefield(m, modes, 2.0, 102);
    for (auto _ : state) {
        benchmark::DoNotOptimize(star(alpha, f, g));
    }
    state.SetComplexityN(modes);
}
BENCHMARK(BM_StarProduct)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_StarChainTriple(benchmark::State& state) {
    const int m = 2;
    const int modes = static_cast<int>(state.range(0));
    const Cocycle alpha = bench_cocycle(m);
    const std::vector<ModeField> fields = {
        random_modefield(m, modes, 2.0, 201),
        random_modefield(m, modes, 2.0, 202),
        random_modefield(m, modes, 2.0, 203),
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(star_chain(alpha, fields));
    }
}
BENCHMARK(BM_StarChainTriple)->Arg(4)->Arg(8)->Arg(16);

void BM_CocycleEval(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const StarCocycle alpha = random_cocycle(m, 42, 4, 43);
    const auto pairs = sample_pairs(m, 64, 7);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[k++ % pairs.size()];
        benchmark::DoNotOptimize(alpha.eval(p, q));
    }
}
BENCHMARK(BM_CocycleEval)->Arg(1)->Arg(2)->Arg(4);

void BM_CoboundaryArity2(benchmark::State& state) {
    const int m = 2;
    const Cocycle alpha = bench_cocycle(m);
    const NCochain d = coboundary(alpha.as_cochain());
    const auto triples = sample_triples(m, 64, 11);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& [p, q, r] = triples[k++ % triples.size()];
        benchmark::DoNotOptimize(d(p, q, r));
    }
}
BENCHMARK(BM_CoboundaryArity2);

void BM_SigmaStructured(benchmark::State& state) {
    const int m = 2;
    const Cocycle alpha = bench_cocycle(m);
    const auto pairs = sample_pairs(m, 16, 13);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[k++ % pairs.size()];
        benchmark::DoNotOptimize(extract_sigma(alpha, p, q));
    }
}
BENCHMARK(BM_SigmaStructured);

void BM_SigmaFiniteDifference(benchmark::State& state) {
    const int m = 2;
    const StarCocycle structured = random_cocycle(m, 42, 4, 43);
    const Cocycle alpha(BlackBoxCocycle(
        m, [structured](const MomentumVector& p, const MomentumVector& q) {
            return structured.eval(p, q);
        }));
    const auto pairs = sample_pairs(m, 16, 13);
    std::size_t k = 0;
    for (auto _ : state) {
        const auto& [p, q] = pairs[k++ % pairs.size()];
        benchmark::DoNotOptimize(extract_sigma(alpha, p, q));
    }
}
BENCHMARK(BM_SigmaFiniteDifference);

void BM_ClassifyBlackBox(benchmark::State& state) {
    const int m = 2;
    const StarCocycle structured = random_cocycle(m, 42, 4, 43);
    const Cocycle alpha(BlackBoxCocycle(
        m, [structured](const MomentumVector& p, const MomentumVector& q) {
            return structured.eval(p, q);
        }));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(alpha));
    }
}
BENCHMARK(BM_ClassifyBlackBox);

}  // namespace

BENCHMARK_MAIN();
