#include <benchmark/benchmark.h>

#include "helgason/cfunction.hpp"
#include "helgason/chains.hpp"
#include "helgason/pair.hpp"
#include "helgason/roots.hpp"
#include "helgason/sphericity.hpp"

using namespace helgason;

namespace {

const PairParams kSmall{1, 1, 1, 1};
const PairParams kMedium{2, 1, 2, 1};

void bm_full_root_table(benchmark::State& state) {
    const PairData pair = build_pair(kMedium);
    for (auto _ : state) benchmark::DoNotOptimize(full_root_table(pair));
}
BENCHMARK(bm_full_root_table);

void bm_oracle_verify(benchmark::State& state) {
    const PairData pair = build_pair(kSmall);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_verify_roots(pair));
}
BENCHMARK(bm_oracle_verify);

void bm_restricted_data(benchmark::State& state) {
    const PairData pair = build_pair(kMedium);
    for (auto _ : state) benchmark::DoNotOptimize(restricted_root_data(pair));
}
BENCHMARK(bm_restricted_data);

void bm_c_evaluate(benchmark::State& state) {
    const PairData pair = build_pair(kMedium);
    const auto sigma_plus = positive_restricted_system(pair);
    AStarWeight lam(1, 1);
    lam.ldelta[0] = Rational(-7, 3);
    lam.leps[0] = Rational(4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(c_evaluate(sigma_plus, lam));
}
BENCHMARK(bm_c_evaluate);

void bm_reversal_chain(benchmark::State& state) {
    const DeltaEpsChain chain = compatible_chain(kMedium);
    for (auto _ : state) benchmark::DoNotOptimize(reversal_chain(chain));
}
BENCHMARK(bm_reversal_chain);

void bm_classify_sweep(benchmark::State& state) {
    const PairData pair = build_pair(kMedium);
    const auto weights = enumerate_spherical(kMedium, 4);
    for (auto _ : state)
        for (const auto& lam : weights) benchmark::DoNotOptimize(classify(pair, lam));
}
BENCHMARK(bm_classify_sweep);

}  // namespace

BENCHMARK_MAIN();
