// Microbenchmarks for the hot paths: enumeration, canonical forms, the two
// coproducts, quotients, and the identity sweeps. Ground sizes are the
// benchmark argument where it makes sense; sizes are kept small because the
// state spaces grow super-exponentially.

#include <benchmark/benchmark.h>

#include "topoquandle/enumeration.hpp"
#include "topoquandle/species.hpp"
#include "topoquandle/verify.hpp"

namespace {

using namespace tq;

void bm_enumerate_quandles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto all = enumerate_quandles(n);
        benchmark::DoNotOptimize(all.data());
    }
}
BENCHMARK(bm_enumerate_quandles)->Arg(3)->Arg(4)->Arg(5);

void bm_enumerate_pairs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto all = enumerate_topological_quandles(n);
        benchmark::DoNotOptimize(all.data());
    }
}
BENCHMARK(bm_enumerate_pairs)->Arg(2)->Arg(3)->Arg(4);

void bm_dedup_quandles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto all = enumerate_quandles(n);
    for (auto _ : state) {
        auto classes = dedup_by_canonical(all);
        benchmark::DoNotOptimize(classes.data());
    }
}
BENCHMARK(bm_dedup_quandles)->Arg(4)->Arg(5);

void bm_canonical_form(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const quandle q = quandle::dihedral(n);
    for (auto _ : state) {
        auto form = canonical(q);
        benchmark::DoNotOptimize(form.bytes.data());
    }
}
BENCHMARK(bm_canonical_form)->Arg(4)->Arg(5)->Arg(6);

// One fixed mid-size pair reused by the coproduct and quotient benchmarks:
// the dihedral table with the finest non-discrete compatible order we can
// write down uniformly (the indiscrete one).
topo_quandle sample_pair(int n) {
    return topo_quandle::make(quandle::dihedral(n),
                              topology::indiscrete(default_labels(n)));
}

void bm_delta(benchmark::State& state) {
    const topo_quandle x = sample_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto sum = delta(x, true);
        benchmark::DoNotOptimize(&sum);
    }
}
BENCHMARK(bm_delta)->Arg(3)->Arg(5)->Arg(7);

void bm_gamma(benchmark::State& state) {
    const topo_quandle x = sample_pair(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto sum = gamma(x);
        benchmark::DoNotOptimize(&sum);
    }
}
BENCHMARK(bm_gamma)->Arg(3)->Arg(4)->Arg(5);

void bm_quotient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const topology t = topology::indiscrete(default_labels(n));
    const topology fine = topology::discrete(default_labels(n));
    for (auto _ : state) {
        auto q = t.quotient(fine);
        benchmark::DoNotOptimize(&q);
    }
}
BENCHMARK(bm_quotient)->Arg(4)->Arg(8)->Arg(16);

void bm_verify_sweep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto lines = run_verification(n);
        benchmark::DoNotOptimize(lines.data());
    }
}
BENCHMARK(bm_verify_sweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
