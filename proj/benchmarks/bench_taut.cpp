#include "taut/linear.hpp"
#include "taut/pipeline.hpp"
#include "taut/presets.hpp"
#include "taut/suites.hpp"
#include "taut/taut.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace taut;

namespace {

void rank_of_random_matrix(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::vector<Vector> rows(n, Vector(n));
    for (auto& row : rows)
        for (auto& v : row)
            v = entry(rng);
    const SparseMatrix m = SparseMatrix::from_dense(rows, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(rank_of_random_matrix)->Arg(16)->Arg(32)->Arg(64);

void monomial_basis(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) {
        // a fresh algebra each time so the basis cache does not help
        AlgebraPtr A = make_algebra({{"a", 2, ""}, {"b", 4, ""}, {"c", 6, ""}, {"u", 3, ""}, {"v", 5, ""}});
        benchmark::DoNotOptimize(A->dim(degree));
    }
}
BENCHMARK(monomial_basis)->Arg(20)->Arg(40);

void build_preset_pipeline(benchmark::State& state, const char* preset, int param)
{
    const SetupSpec s = preset_setup(preset, param);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pipeline(s).checks_pass());
}
BENCHMARK_CAPTURE(build_preset_pipeline, even_sphere_8, "s-even", 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build_preset_pipeline, odd_sphere_7, "s-odd", 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build_preset_pipeline, cp3, "cpn", 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(build_preset_pipeline, cp2_real, "cpn-real", 2)->Unit(benchmark::kMillisecond);

void kappa_ring_of_cp2(benchmark::State& state)
{
    const Pipeline p = build_pipeline(preset_setup("cpn", 2));
    KappaRingOptions opts;
    opts.cutoff = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kappa_ring(p.model, {}, opts).relations.size());
}
BENCHMARK(kappa_ring_of_cp2)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void projective_plane_report(benchmark::State& state)
{
    const Pipeline p = build_pipeline(preset_setup("cpn-real", 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(cp2_report(p.untrivialized, p.base_signs, 24).pd10_survives);
}
BENCHMARK(projective_plane_report)->Unit(benchmark::kMillisecond);

void suite(benchmark::State& state, const char* name, int n)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite(name, {n, std::nullopt, std::nullopt}).failures());
}
BENCHMARK_CAPTURE(suite, cpn_generators_3, "cpn-generators", 3)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(suite, projective_kernel_3, "projective-kernel", 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
