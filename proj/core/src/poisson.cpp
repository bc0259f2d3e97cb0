#include "kpalg/poisson.hpp"

#include "kpalg/error.hpp"

namespace kpalg {

PoissonStructure::PoissonStructure(GaussianRational lambda, GaussianRational mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu))
{
    if (lambda_.is_zero() && mu_.is_zero())
        throw Error(ErrorCode::invalid_argument, "Poisson structure with lambda = mu = 0");
}

RationalFunction PoissonStructure::xy_bracket() const
{
    return RationalFunction(lambda_ * Polynomial::x() + mu_ * Polynomial::y());
}

RationalFunction LinearMap::image_x() const
{
    return RationalFunction(a11 * Polynomial::x() + a12 * Polynomial::y() + Polynomial(a13));
}

RationalFunction LinearMap::image_y() const
{
    return RationalFunction(a21 * Polynomial::x() + a22 * Polynomial::y() + Polynomial(a23));
}

RationalFunction LinearMap::apply(const RationalFunction& f) const
{
    return substitute(f, image_x(), image_y());
}

RationalFunction bracket(const RationalFunction& f, const RationalFunction& g, const PoissonStructure& structure)
{
    if (f.is_constant() || g.is_constant())
        return RationalFunction();
    // With f = a/b and g = c/d the Jacobian is a single fraction over b^2 d^2.
    const Polynomial &a = f.num(), &b = f.den(), &c = g.num(), &d = g.den();
    auto dq = [](const Polynomial& n, const Polynomial& m, Var v) { return n.derivative(v) * m - n * m.derivative(v); };
    const Polynomial xy = structure.xy_bracket().num();
    const Polynomial num = (dq(a, b, Var::x) * dq(c, d, Var::y) - dq(a, b, Var::y) * dq(c, d, Var::x)) * xy;
    const Polynomial bd = b * d;
    return RationalFunction::normalize(num, bd * bd);
}

LinearMap normalize_to_canonical(const PoissonStructure& structure)
{
    const GaussianRational zero;
    const GaussianRational one(1);
    if (structure.lambda().is_zero())
        return LinearMap{zero, -structure.mu(), zero, one, zero, zero};
    return LinearMap{one, -structure.mu(), zero, zero, structure.lambda(), zero};
}

} // namespace kpalg
