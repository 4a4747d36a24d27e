#include <benchmark/benchmark.h>

#include "dqp/algebra.hpp"
#include "dqp/internal.hpp"
#include "dqp/pictures.hpp"
#include "dqp/words.hpp"

using namespace dqp;

static void BM_EnumeratePreorders(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(Preorder::enumerate(n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumeratePreorders)->Arg(3)->Arg(4)->Arg(5);

static void BM_Isoclasses(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_isoclasses(n, Family::dqp));
}
BENCHMARK(BM_Isoclasses)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DoubleQuasiPoset p(Preorder::closure(n, {{0, 1}, {1, 0}, {1, 2}}), Preorder::chain(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(p));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

static void BM_BlowUps(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DoubleQuasiPoset p(Preorder::indiscrete(n), Preorder::chain(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(blow_ups(p));
}
BENCHMARK(BM_BlowUps)->Arg(3)->Arg(4);

static void BM_Coproduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DoubleQuasiPoset p(Preorder::closure(n, {{0, 1}, {1, 0}}), Preorder::chain(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(coproduct(p, true));
}
BENCHMARK(BM_Coproduct)->Arg(4)->Arg(6);

static void BM_Pairing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DoubleQuasiPoset p(Preorder::discrete(n), Preorder::chain(n));
    for (auto _ : state)
        benchmark::DoNotOptimize(pairing(p, p, PairingKind::standard));
}
BENCHMARK(BM_Pairing)->Arg(4)->Arg(5)->Arg(6);

static void BM_GramRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto g = gram(n, Family::dqp, PairingKind::standard);
        benchmark::DoNotOptimize(exact_rank(g));
    }
}
BENCHMARK(BM_GramRank)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_InternalProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto u = to_basis(word_to_dqp(PackedWord(std::vector<int>(static_cast<size_t>(n), 1))));
    const auto v = to_basis(word_to_dqp(PackedWord::from_perm(identity_perm(n))));
    for (auto _ : state)
        benchmark::DoNotOptimize(internal_product(u, v, InternalKind::lt));
}
BENCHMARK(BM_InternalProduct)->Arg(3)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
