#include "kpalg/expr.hpp"
#include "kpalg/isomorphism.hpp"

#include <benchmark/benchmark.h>

using namespace kpalg;

namespace {

Metric diag(const char* a, const char* c) { return Metric::diagonal(parse_expr(a), parse_expr(c)); }

} // namespace

static void BM_DecideDiagX(benchmark::State& state)
{
    const Metric g = diag("x", "1 + x + x^2");
    const Metric g2 = diag("-8*x", "1 - 2*x + 4*x^2");
    for (auto _ : state)
        benchmark::DoNotOptimize(decide_diag_x(g, g2));
}
BENCHMARK(BM_DecideDiagX);

static void BM_CheckXdep(benchmark::State& state)
{
    const Metric g = diag("x", "x^2");
    const Metric g2{parse_expr("x + x^8"), parse_expr("x^5"), parse_expr("x^2")};
    for (auto _ : state)
        benchmark::DoNotOptimize(check_xdep_sufficient(g, g2, GaussianRational(1)));
}
BENCHMARK(BM_CheckXdep);

static void BM_CheckDiagY(benchmark::State& state)
{
    const Metric g = diag("y", "1 + y^2");
    const Metric g2 = diag("y + 2", "5 + y^2 + 4*y");
    for (auto _ : state)
        benchmark::DoNotOptimize(check_diag_y_sufficient(g, g2));
}
BENCHMARK(BM_CheckDiagY);

static void BM_BruteForce(benchmark::State& state)
{
    const Metric g = diag("x^3 + 1", "x^2 - x");
    const Metric g2 = transform_metric(g, ScaleShear{GaussianRational(-2), parse_expr("x^4/3 - x").num()});
    SearchBounds bounds;
    bounds.max_p_degree = static_cast<unsigned>(state.range(0));
    bounds.alpha_candidates = {GaussianRational(1), GaussianRational(-1), GaussianRational(2), GaussianRational(-2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_iso(g, g2, bounds));
}
BENCHMARK(BM_BruteForce)->Arg(4)->Arg(8)->Arg(16);
