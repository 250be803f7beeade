#include <benchmark/benchmark.h>

#include "milnor/gcd.hpp"
#include "milnor/generators.hpp"
#include "milnor/local_invariants.hpp"
#include "milnor/oracle.hpp"
#include "milnor/poly_text.hpp"

using namespace milnor;

static void BM_PolyMul(benchmark::State& state) {
    FactoredCurve c = gen_extremal(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(c.product());
    }
}
BENCHMARK(BM_PolyMul)->Arg(6)->Arg(10)->Arg(14);

static void BM_GcdBivariate(benchmark::State& state) {
    BiPoly a = parse_poly("(x+x^2+y^2)*(x+2*x^2+y^2)*(y-x^3)");
    BiPoly b = parse_poly("(x+x^2+y^2)*(y^3-x^2)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd_bivariate(a, b));
    }
}
BENCHMARK(BM_GcdBivariate);

static void BM_MilnorExtremal(benchmark::State& state) {
    BiPoly f = gen_extremal(static_cast<int>(state.range(0))).product();
    for (auto _ : state) {
        benchmark::DoNotOptimize(milnor_number(f));
    }
}
BENCHMARK(BM_MilnorExtremal)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

static void BM_MilnorOracle(benchmark::State& state) {
    BiPoly f = gen_irreducible_max(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle::milnor_oracle(f));
    }
}
BENCHMARK(BM_MilnorOracle)->Arg(4)->Arg(6);

static void BM_FultonIntersection(benchmark::State& state) {
    BiPoly f = parse_poly("x+x^2+y^2");
    BiPoly g = parse_poly("x+2*x^2+y^2");
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersection_multiplicity(f, g));
    }
}
BENCHMARK(BM_FultonIntersection);

BENCHMARK_MAIN();
