#include <benchmark/benchmark.h>

#include "rank1/cbc_check.hpp"
#include "rank1/cbc_search.hpp"
#include "rank1/lattice.hpp"
#include "rank1/msearch.hpp"

using namespace rank1;

namespace {

// residue state after z_1 = 1 on the axis cross, ready for component 2
struct KernelFixture {
    FrequencySet set;
    std::vector<std::int64_t> column;
    ResidueState nu;

    KernelFixture(std::size_t d, std::int64_t n, std::uint64_t m)
        : set(gen_axis_cross(d, n)), column(set.column(1)), nu(init_residues(set, m, Mode::reconstruction).residues) {}
};

void BM_IntegrationAdmits(benchmark::State& state) {
    const auto n = state.range(0);
    KernelFixture f(8, n, 1000003);
    IntegrationStep step(f.column, f.nu);
    std::uint64_t y = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(step.admits(y));
        y = (y * 7919) % 1000003;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.set.size()));
}
BENCHMARK(BM_IntegrationAdmits)->Arg(64)->Arg(1024);

void BM_ReconstructionAdmits(benchmark::State& state) {
    const auto n = state.range(0);
    KernelFixture f(8, n, 1000003);
    ReconstructionStep step(f.column, f.nu);
    std::uint64_t y = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(step.admits(y));
        y = (y * 7919) % 1000003;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.set.size()));
}
BENCHMARK(BM_ReconstructionAdmits)->Arg(64)->Arg(1024);

void BM_CbcConstruct(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto set = gen_axis_cross(d, 64);
    const auto m = initial_size(set, Mode::reconstruction);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto r = cbc_construct(set, CbcConfig{.lattice_size = m, .candidate_budget = 100, .mode = Mode::reconstruction, .seed = seed++});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CbcConstruct)->Arg(2)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_HeuristicSearch(benchmark::State& state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto set = gen_axis_cross(d, 64);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto out = heuristic_search(set, 5, 100, Mode::reconstruction, seed++);
        state.counters["M"] = static_cast<double>(out.lattice_size);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_HeuristicSearch)->Arg(2)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_TwoStepPermutation(benchmark::State& state) {
    Rng rng(1);
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(two_step_permutation(m, 100, rng));
}
BENCHMARK(BM_TwoStepPermutation)->Arg(1000)->Arg(100000);

void BM_NextPrime(benchmark::State& state) {
    std::uint64_t x = 1'000'000'000'000ull;
    for (auto _ : state) {
        x = next_prime(x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_NextPrime);

}  // namespace
BENCHMARK_MAIN();
