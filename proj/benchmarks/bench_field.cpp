#include "kpalg/expr.hpp"

#include <benchmark/benchmark.h>

using namespace kpalg;

static void BM_GcdCommonFactor(benchmark::State& state)
{
    const auto degree = static_cast<unsigned>(state.range(0));
    const Polynomial r = (Polynomial::x() + Polynomial::y() * GaussianRational(3) + Polynomial(1)).pow(degree);
    const Polynomial p = r * parse_expr("x^3 - 2*y^2 + x*y + 5").num();
    const Polynomial q = r * parse_expr("(1 + i)*x^2*y - y^3 + 7/3").num();
    for (auto _ : state)
        benchmark::DoNotOptimize(gcd(p, q));
}
BENCHMARK(BM_GcdCommonFactor)->DenseRange(1, 6);

static void BM_GcdCoprime(benchmark::State& state)
{
    const auto degree = static_cast<unsigned>(state.range(0));
    const Polynomial p = (Polynomial::x() - Polynomial::y() + Polynomial(2)).pow(degree) + Polynomial(1);
    const Polynomial q = (Polynomial::x() * Polynomial::y() - Polynomial(3)).pow(degree) + Polynomial::y();
    for (auto _ : state)
        benchmark::DoNotOptimize(gcd(p, q));
}
BENCHMARK(BM_GcdCoprime)->DenseRange(2, 8, 2);

static void BM_Multiply(benchmark::State& state)
{
    const auto degree = static_cast<unsigned>(state.range(0));
    const Polynomial p = parse_expr("1/2*x + 2/3*y + i/5").num().pow(degree);
    const Polynomial q = parse_expr("3/7*x*y - 5/2 + x^2").num().pow(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_Multiply)->DenseRange(2, 8, 2);

static void BM_RationalAdd(benchmark::State& state)
{
    const RationalFunction f = parse_expr("(x^3 + y)/(x*y^2 - 1)");
    const RationalFunction g = parse_expr("(y^2 - x)/(x^2 + x*y + 1)");
    for (auto _ : state)
        benchmark::DoNotOptimize(f + g);
}
BENCHMARK(BM_RationalAdd);

static void BM_Partial(benchmark::State& state)
{
    const RationalFunction f = parse_expr("(x^3*y - 2*y^2 + 1)/(x^2 + y^3 - x*y)");
    for (auto _ : state)
        benchmark::DoNotOptimize(partial(partial(f, Var::x), Var::y));
}
BENCHMARK(BM_Partial);

static void BM_Substitute(benchmark::State& state)
{
    const RationalFunction f = parse_expr("(x^3*y - 2*y^2 + 1)/(x^2 + y^3 - x*y)");
    const RationalFunction sx = parse_expr("2*x"), sy = parse_expr("y + x^3/4");
    for (auto _ : state)
        benchmark::DoNotOptimize(substitute(f, sx, sy));
}
BENCHMARK(BM_Substitute);
