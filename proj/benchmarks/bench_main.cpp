#include <benchmark/benchmark.h>

#include <random>

#include "bpc/boolfn.hpp"
#include "bpc/codec.hpp"
#include "bpc/search.hpp"

namespace {

bpc::BooleanFunction random_fn(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    bpc::BooleanFunction f(n);
    for (auto& w : f.words()) w = rng();
    if (n < 6) f.words()[0] &= (std::uint64_t{1} << f.size()) - 1;
    return f;
}

void BM_WalshTransform(benchmark::State& state) {
    const int n = int(state.range(0));
    bpc::BooleanFunction f = random_fn(n, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bpc::walsh_transform(f));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_WalshTransform)->DenseRange(8, 20, 4);

void BM_Mobius(benchmark::State& state) {
    const int n = int(state.range(0));
    bpc::BooleanFunction f = random_fn(n, 2);
    std::vector<std::uint64_t> words = f.words();
    for (auto _ : state) {
        bpc::mobius_in_place(n, words);
        benchmark::DoNotOptimize(words.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_Mobius)->DenseRange(8, 20, 4);

void BM_Classify(benchmark::State& state) {
    const int n = int(state.range(0));
    bpc::BooleanFunction f = bpc::random_maiorana_mcfarland(n / 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bpc::classify_plateau(f));
    }
}
BENCHMARK(BM_Classify)->DenseRange(8, 16, 4);

void BM_EncodeBentDirect(benchmark::State& state) {
    const int n = int(state.range(0));
    bpc::BooleanFunction f = bpc::random_maiorana_mcfarland(n / 2, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bpc::encode_plateaued(f, 1));
    }
}
BENCHMARK(BM_EncodeBentDirect)->DenseRange(6, 10, 2);

void BM_EncodeBentDual(benchmark::State& state) {
    const int n = int(state.range(0));
    bpc::BooleanFunction f = bpc::random_maiorana_mcfarland(n / 2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bpc::encode_bent_dual(f, 1));
    }
}
BENCHMARK(BM_EncodeBentDual)->DenseRange(6, 10, 2);

void BM_DecodeBentDirect(benchmark::State& state) {
    const int n = int(state.range(0));
    auto bytes = bpc::encode_plateaued(bpc::random_maiorana_mcfarland(n / 2, 6), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bpc::decode(bytes));
    }
}
BENCHMARK(BM_DecodeBentDirect)->DenseRange(6, 10, 2);

}  // namespace

BENCHMARK_MAIN();
