#include <benchmark/benchmark.h>

#include "schur/enumeration.hpp"
#include "schur/formulas.hpp"
#include "schur/oracle.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(schur::omega(n));
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(21)->Arg(60)->Arg(91)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(schur::brute_force_schur_rings(n).size());
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_CheckAxioms(benchmark::State& state) {
    const auto rings = schur::enumerate(static_cast<int>(state.range(0))).rings;
    for (auto _ : state) {
        for (const auto& p : rings) benchmark::DoNotOptimize(schur::is_schur_partition(p));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rings.size()));
}
BENCHMARK(BM_CheckAxioms)->Arg(24)->Arg(60);

void BM_FormulaTable(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t sum = 0;
        for (std::uint64_t n = 2; n <= 1000; ++n) {
            if (schur::classify_for_formula(n).kind != schur::FormulaKind::none) sum += schur::omega_formula(n);
        }
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_FormulaTable);

} // namespace

BENCHMARK_MAIN();
