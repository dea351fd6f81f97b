// bench_main.cpp — microbenchmarks for the hot paths: Hamiltonian assembly,
// dense non-Hermitian diagonalization, band sampling and exact band solving

#include <benchmark/benchmark.h>

#include "chiralwg/chain.hpp"
#include "chiralwg/exact.hpp"
#include "chiralwg/lattice2d.hpp"
#include "chiralwg/model.hpp"
#include "chiralwg/spectral.hpp"

using namespace chiralwg;

namespace {

void BM_BuildChain(benchmark::State& state) {
    ChainSpec spec{static_cast<int>(state.range(0)), PhaseQd::parse("pi"), 0.1, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_chain_hamiltonian(spec));
    }
}
BENCHMARK(BM_BuildChain)->Arg(20)->Arg(100)->Arg(400);

void BM_BuildLattice(benchmark::State& state) {
    LatticeSpec spec{static_cast<int>(state.range(0)), PhaseQd::parse("pi"), 0.0, 0.02, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_lattice_hamiltonian(spec));
    }
}
BENCHMARK(BM_BuildLattice)->Arg(4)->Arg(8)->Arg(14);

void BM_Eigendecompose1D(benchmark::State& state) {
    ChainSpec spec{static_cast<int>(state.range(0)), PhaseQd::parse("pi"), 0.1, 1.0};
    const auto h = build_chain_hamiltonian(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigendecompose(h));
    }
}
BENCHMARK(BM_Eigendecompose1D)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Eigendecompose2D(benchmark::State& state) {
    LatticeSpec spec{static_cast<int>(state.range(0)), PhaseQd::parse("pi"), 0.0, 0.0, 1.0};
    const auto h = build_lattice_hamiltonian(spec);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigendecompose(h));
    }
}
BENCHMARK(BM_Eigendecompose2D)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_MarkovBands(benchmark::State& state) {
    ChainSpec spec{1, PhaseQd::parse("pi"), 0.2, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(markov_bands_1d(spec, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_MarkovBands)->Arg(201)->Arg(2001);

void BM_ExactBandsGrid(benchmark::State& state) {
    ChainSpec spec{1, PhaseQd::parse("pi"), 0.2, 1.0};
    std::vector<double> grid;
    const int n = static_cast<int>(state.range(0));
    for (int i = 1; i <= n; ++i) grid.push_back(-pi + 2.0 * pi * i / n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_bands_on_grid(spec, grid));
    }
}
BENCHMARK(BM_ExactBandsGrid)->Arg(201)->Arg(2001);

void BM_Bands2DLinear(benchmark::State& state) {
    LatticeSpec spec{1, PhaseQd::parse("pi"), 0.0, 0.02, 1.0};
    const GridSpec grid{static_cast<int>(state.range(0)), 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bands_2d(spec, grid, BlochVariant::linearized));
    }
}
BENCHMARK(BM_Bands2DLinear)->Arg(101)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
