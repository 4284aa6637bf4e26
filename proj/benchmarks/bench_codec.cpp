#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "betaseq/axioms.hpp"
#include "betaseq/codec.hpp"
#include "betaseq/witness.hpp"

using namespace betaseq;

namespace {

void BM_PairUnpair(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Natural x = random_bits(rng, static_cast<std::size_t>(state.range(0)));
    const Natural y = random_bits(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(unpair(pair(x, y)));
    }
}
BENCHMARK(BM_PairUnpair)->RangeMultiplier(4)->Range(64, 16384);

void BM_SeqBuild(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::vector<Natural> xs;
    for (std::int64_t t = 0; t < state.range(0); ++t) {
        xs.push_back(random_bits(rng, 64));
    }
    std::size_t digits = 0;
    for (auto _ : state) {
        const SeqHandle h = seq_build(xs);
        digits = h.w.to_string().size();
        benchmark::DoNotOptimize(h);
    }
    state.counters["code_digits"] = static_cast<double>(digits);
}
BENCHMARK(BM_SeqBuild)->DenseRange(2, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_SeqDecode(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<Natural> xs;
    for (std::int64_t t = 0; t < state.range(0); ++t) {
        xs.push_back(random_bits(rng, 64));
    }
    const SeqHandle h = seq_build(xs);
    for (auto _ : state) {
        benchmark::DoNotOptimize(seq_decode(h));
    }
}
BENCHMARK(BM_SeqDecode)->DenseRange(2, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_Recode(benchmark::State& state) {
    const auto k = static_cast<std::uint64_t>(state.range(0));
    std::mt19937_64 rng(4);
    const Natural v = random_bits(rng, 32);
    const Natural u = random_bits(rng, 128);
    const Natural base = lcm_upto(k + 1);
    const Natural vprime = (v / base + Natural(1)) * base;
    const Natural x = random_bits(rng, 32);
    for (auto _ : state) {
        benchmark::DoNotOptimize(i2_recode(u, v, vprime, x, k));
    }
}
BENCHMARK(BM_Recode)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);

void BM_Crt(benchmark::State& state) {
    const auto k = static_cast<std::uint64_t>(state.range(0));
    const Natural vprime = lcm_upto(k + 1) * Natural(1000003);
    std::vector<Natural> moduli;
    std::vector<Natural> residues;
    for (std::uint64_t j = 1; j <= k + 1; ++j) {
        moduli.push_back(Natural(1) + Natural(j) * vprime);
        residues.push_back(Natural(j * 7));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(crt(residues, moduli));
    }
}
BENCHMARK(BM_Crt)->DenseRange(1, 8)->Unit(benchmark::kMicrosecond);

void BM_PolyNatAxiom(benchmark::State& state) {
    const SampleBudget budget{static_cast<std::uint64_t>(state.range(0)), 42};
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_axiom(ModelId::polynat, AxiomId::AM, budget));
    }
}
BENCHMARK(BM_PolyNatAxiom)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
