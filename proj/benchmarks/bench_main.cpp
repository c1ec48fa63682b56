#include <benchmark/benchmark.h>

#include <random>

#include "folcup/bounds.hpp"
#include "folcup/fixtures.hpp"
#include "folcup/relative.hpp"

using namespace folcup;

namespace {

SparseMatrix random_sparse(std::uint64_t seed, int n, int nnz_per_col)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> val(-4, 4);
    SparseMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < nnz_per_col; ++k)
            m.set(row(rng), j, rational(val(rng)));
    return m;
}

void BM_RankKernelImage(benchmark::State& state)
{
    SparseMatrix m = random_sparse(7, static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto r = rank_kernel_image(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_RankKernelImage)->Arg(40)->Arg(120)->Arg(240);

void BM_TotalCohomology_T3(benchmark::State& state)
{
    auto t3 = fixtures::point_foliation_torus(3);
    for (auto _ : state) {
        auto h = total_cohomology(t3.mc);
        benchmark::DoNotOptimize(h.size());
    }
}
BENCHMARK(BM_TotalCohomology_T3);

void BM_InfinityPage_TorusBundle(benchmark::State& state)
{
    auto tb = fixtures::torus_bundle(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Page p = infinity_page(tb.mc);
        benchmark::DoNotOptimize(p.r);
    }
}
BENCHMARK(BM_InfinityPage_TorusBundle)->Arg(3)->Arg(5)->Arg(7);

void BM_MayerVietoris_TorusCover(benchmark::State& state)
{
    CoverData c = fixtures::torus_cover(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        MayerVietoris mv(c);
        benchmark::DoNotOptimize(mv.identity_checks().ok());
    }
}
BENCHMARK(BM_MayerVietoris_TorusCover)->Arg(3)->Arg(5);

void BM_BoundReport_TorusBundle(benchmark::State& state)
{
    auto tb = fixtures::torus_bundle(3, 3);
    for (auto _ : state) {
        BoundReport r = bound_report(tb.mc, tb.ps);
        benchmark::DoNotOptimize(r.e2.certificate.value);
    }
}
BENCHMARK(BM_BoundReport_TorusBundle);

void BM_Validate_TorusBundle(benchmark::State& state)
{
    auto tb = fixtures::torus_bundle(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ValidationReport r = validate(tb.mc, &tb.ps);
        benchmark::DoNotOptimize(r.ok());
    }
}
BENCHMARK(BM_Validate_TorusBundle)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
