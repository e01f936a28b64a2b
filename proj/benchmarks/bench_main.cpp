#include <benchmark/benchmark.h>

#include "grsets/resolution.hpp"
#include "grsets/selftest.hpp"
#include "grsets/series.hpp"

using namespace grsets;

static void BM_canonicalize_s3(benchmark::State& state) {
    GroupPtr s3 = make_named_group(Group::Kind::dihedral, 3);
    std::mt19937_64 rng(7);
    auto raw = selftest::random_raw_orbit(rng, s3, 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(selftest::realize(raw, 2));
    }
}
BENCHMARK(BM_canonicalize_s3);

static void BM_orbit_product_s3(benchmark::State& state) {
    GroupPtr s3 = make_named_group(Group::Kind::dihedral, 3);
    std::mt19937_64 rng(11);
    Orbit a = selftest::realize(selftest::random_raw_orbit(rng, s3, 1, 3), 1);
    Orbit b = selftest::realize(selftest::random_raw_orbit(rng, s3, 1, 3), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit_product(a, b));
    }
}
BENCHMARK(BM_orbit_product_s3);

static void BM_poincare_antipodal(benchmark::State& state) {
    const ResolutionSpec& spec = builtin_spec("z2-antipodal");
    const Bound bound{static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(poincare_series(spec, bound));
    }
}
BENCHMARK(BM_poincare_antipodal)->Arg(8)->Arg(16)->Arg(32);

static void BM_project_pi_cusp(benchmark::State& state) {
    RingElement p = poincare_series(builtin_spec("cusp"), Bound{24});
    for (auto _ : state) {
        benchmark::DoNotOptimize(project_pi(p));
    }
}
BENCHMARK(BM_project_pi_cusp);

BENCHMARK_MAIN();
