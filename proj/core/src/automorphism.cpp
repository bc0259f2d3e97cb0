#include "kpalg/automorphism.hpp"

#include "kpalg/error.hpp"
#include "kpalg/poisson.hpp"

namespace kpalg {

Automorphism::Automorphism(ScaleShear s)
    : data_(std::move(s))
{
    const auto& v = std::get<ScaleShear>(data_);
    if (v.alpha.is_zero())
        throw Error(ErrorCode::invalid_automorphism, "scale-shear with alpha = 0");
    if (v.p.depends_on(Var::y))
        throw Error(ErrorCode::invalid_automorphism, "scale-shear shift p must not depend on y");
}

Automorphism::Automorphism(Mobius m)
    : data_(std::move(m))
{
    const auto& v = std::get<Mobius>(data_);
    if (v.determinant().is_zero())
        throw Error(ErrorCode::invalid_automorphism, "Mobius map with alpha*delta - beta*gamma = 0");
    if (v.r.depends_on(Var::y))
        throw Error(ErrorCode::invalid_automorphism, "Mobius shift r must not depend on y");
}

const ScaleShear& Automorphism::scale_shear() const
{
    if (!is_scale_shear())
        throw Error(ErrorCode::unsupported_automorphism, "operation requires a scale-shear automorphism");
    return std::get<ScaleShear>(data_);
}

const Mobius& Automorphism::mobius() const
{
    if (!is_mobius())
        throw Error(ErrorCode::invalid_argument, "automorphism is not a Mobius map");
    return std::get<Mobius>(data_);
}

namespace {

RationalFunction linear_in_x(const GaussianRational& slope, const GaussianRational& offset)
{
    return RationalFunction(slope * Polynomial::x() + Polynomial(offset));
}

} // namespace

RationalFunction Automorphism::image_x() const
{
    if (const auto* s = std::get_if<ScaleShear>(&data_))
        return RationalFunction(s->alpha * Polynomial::x());
    const auto& m = std::get<Mobius>(data_);
    return linear_in_x(m.alpha, m.beta) / linear_in_x(m.gamma, m.delta);
}

RationalFunction Automorphism::image_y() const
{
    if (const auto* s = std::get_if<ScaleShear>(&data_))
        return RationalFunction(Polynomial::y() + s->p);
    const auto& m = std::get<Mobius>(data_);
    const RationalFunction factor = linear_in_x(m.alpha, m.beta) * linear_in_x(m.gamma, m.delta)
                                    / RationalFunction(m.determinant() * Polynomial::x());
    return factor * RationalFunction::y() + m.r;
}

RationalFunction apply_auto(const Automorphism& phi, const RationalFunction& f)
{
    if (f.is_constant())
        return f;
    return substitute(f, phi.image_x(), phi.image_y());
}

Matrix2 apply_auto(const Automorphism& phi, const Matrix2& m)
{
    return m.substitute(phi.image_x(), phi.image_y());
}

bool is_poisson_morphism(const RationalFunction& image_x, const RationalFunction& image_y)
{
    return bracket(image_x, image_y) == image_x;
}

bool is_poisson_auto(const Automorphism& phi)
{
    return is_poisson_morphism(phi.image_x(), phi.image_y());
}

ScaleShear compose(const ScaleShear& outer, const ScaleShear& inner)
{
    return {outer.alpha * inner.alpha, outer.p + inner.p.scale_variable(Var::x, outer.alpha)};
}

Automorphism compose(const Automorphism& outer, const Automorphism& inner)
{
    return Automorphism(compose(outer.scale_shear(), inner.scale_shear()));
}

ScaleShear invert(const ScaleShear& phi)
{
    const GaussianRational inv = phi.alpha.inverse();
    return {inv, -phi.p.scale_variable(Var::x, inv)};
}

Automorphism invert(const Automorphism& phi)
{
    return Automorphism(invert(phi.scale_shear()));
}

Matrix2 jacobian(const Automorphism& phi)
{
    Matrix2 a;
    if (phi.is_scale_shear()) {
        const auto& s = phi.scale_shear();
        a(0, 0) = RationalFunction(s.alpha);
        a(1, 0) = RationalFunction(s.p.derivative(Var::x));
        a(1, 1) = RationalFunction(1);
        return a;
    }
    const RationalFunction px = phi.image_x();
    const RationalFunction py = phi.image_y();
    a(0, 0) = partial(px, Var::x);
    a(0, 1) = partial(px, Var::y);
    a(1, 0) = partial(py, Var::x);
    a(1, 1) = partial(py, Var::y);
    return a;
}

} // namespace kpalg
