#include "kpalg/expr.hpp"
#include "kpalg/kp_core.hpp"

#include <benchmark/benchmark.h>

using namespace kpalg;

namespace {

const RationalFunction kF = parse_expr("(x^2*y + 3)/(x - y^2 + 1)");
const RationalFunction kG = parse_expr("(y^3 - x)/(x*y + 2)");
const RationalFunction kH = parse_expr("(x + 2*y)/(x^3 - i*y)");

} // namespace

static void BM_Bracket(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket(kF, kG));
}
BENCHMARK(BM_Bracket);

static void BM_Jacobi(benchmark::State& state)
{
    for (auto _ : state) {
        RationalFunction j = bracket(kF, bracket(kG, kH)) + bracket(kG, bracket(kH, kF)) + bracket(kH, bracket(kF, kG));
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_Jacobi)->Unit(benchmark::kMillisecond);

static void BM_KpCheck(benchmark::State& state)
{
    const Metric g{parse_expr("x^3 + y"), parse_expr("x*y - 1"), parse_expr("y^2 + 2*x")};
    for (auto _ : state)
        benchmark::DoNotOptimize(kp_check(g));
}
BENCHMARK(BM_KpCheck);
