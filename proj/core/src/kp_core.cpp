#include "kpalg/kp_core.hpp"

#include "kpalg/error.hpp"

#include <cassert>

namespace kpalg {

Metric Metric::from_matrix(const Matrix2& m)
{
    if (!(m(0, 1) == m(1, 0)))
        throw Error(ErrorCode::invalid_argument, "metric is not symmetric");
    return {m(0, 0), m(0, 1), m(1, 1)};
}

Matrix2 Metric::matrix() const
{
    Matrix2 out;
    out(0, 0) = a;
    out(0, 1) = b;
    out(1, 0) = b;
    out(1, 1) = c;
    return out;
}

RationalFunction det(const Metric& g)
{
    return g.a * g.c - g.b * g.b;
}

Matrix2 poisson_matrix(const PoissonStructure& structure)
{
    Matrix2 p;
    p(0, 1) = structure.xy_bracket();
    p(1, 0) = -structure.xy_bracket();
    return p;
}

bool satisfies_kp_condition(const Metric& g, const RationalFunction& eta, const PoissonStructure& structure)
{
    const Matrix2 p = poisson_matrix(structure);
    const Matrix2 gm = g.matrix();
    return eta * (p * gm * p * gm * p) == -p;
}

KPAlgebra kp_check(const Metric& g)
{
    const RationalFunction d = det(g);
    if (d.is_zero())
        throw Error(ErrorCode::degenerate_metric, "metric determinant vanishes");
    const RationalFunction x = RationalFunction::x();
    KPAlgebra out{PoissonStructure::canonical(), g, (x * x * d).inverse()};
    if (!satisfies_kp_condition(g, out.eta))
        throw std::logic_error("Kahler-Poisson identity failed for a nondegenerate metric");
    assert(out.eta * x * x * d == RationalFunction(1));
    return out;
}

} // namespace kpalg
