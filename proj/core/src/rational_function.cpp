#include "kpalg/rational_function.hpp"

#include "kpalg/error.hpp"

#include <algorithm>
#include <vector>

namespace kpalg {

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den)
{
    if (num.is_zero())
        return RationalFunction();
    if (!den.leading_coefficient().is_one()) {
        GaussianRational inv = den.leading_coefficient().inverse();
        num *= inv;
        den *= inv;
    }
    return RationalFunction(std::move(num), std::move(den), canonical_tag{});
}

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero())
        throw Error(ErrorCode::zero_denominator, "rational function with zero denominator");
    if (num.is_zero())
        return RationalFunction();
    GcdCofactors c = gcd_cofactors(num, den);
    return from_coprime(std::move(c.first), std::move(c.second));
}

RationalFunction RationalFunction::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::division_by_zero, "inverse of zero rational function");
    return from_coprime(den_, num_);
}

RationalFunction RationalFunction::pow(long exponent) const
{
    if (exponent < 0)
        return inverse().pow(-exponent);
    // Powers of coprime polynomials stay coprime.
    auto e = static_cast<unsigned>(exponent);
    return from_coprime(num_.pow(e), den_.pow(e));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other)
{
    if (other.is_zero())
        return *this;
    if (is_zero())
        return *this = other;
    if (den_ == other.den_) {
        return *this = normalize(num_ + other.num_, den_);
    }
    if (is_polynomial() && other.is_polynomial()) {
        num_ += other.num_;
        den_ = Polynomial(1);
        if (num_.is_zero())
            *this = RationalFunction();
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g)), and only
    // factors of g can survive in the numerator.
    GcdCofactors g = gcd_cofactors(den_, other.den_);
    Polynomial num = num_ * g.second + other.num_ * g.first;
    if (num.is_zero())
        return *this = RationalFunction();
    if (g.gcd.is_constant())
        return *this = from_coprime(std::move(num), den_ * g.second);
    // den = g * (b/g) * (d/g), so cancelling h | g leaves (g/h) * (b/g) * (d/g).
    GcdCofactors h = gcd_cofactors(num, g.gcd);
    return *this = from_coprime(std::move(h.first), h.second * g.first * g.second);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other)
{
    return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other)
{
    if (is_zero() || other.is_zero())
        return *this = RationalFunction();
    // (a/b)(c/d): cancel gcd(a, d) and gcd(c, b) before multiplying.
    GcdCofactors g1 = gcd_cofactors(num_, other.den_);
    GcdCofactors g2 = gcd_cofactors(other.num_, den_);
    Polynomial num = g1.first * g2.first;
    Polynomial den = g2.second * g1.second;
    return *this = from_coprime(std::move(num), std::move(den));
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other)
{
    if (other.is_zero())
        throw Error(ErrorCode::division_by_zero, "division by zero rational function");
    return *this *= other.inverse();
}

RationalFunction operator-(const RationalFunction& a)
{
    return RationalFunction(-a.num_, a.den_, RationalFunction::canonical_tag{});
}

RationalFunction arith(ArithOp op, const RationalFunction& f, const RationalFunction& g)
{
    switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
    case ArithOp::div: return f / g;
    }
    throw Error(ErrorCode::invalid_argument, "unknown arithmetic operation");
}

RationalFunction partial(const RationalFunction& f, Var v)
{
    const Polynomial dn = f.num().derivative(v);
    if (f.is_polynomial())
        return RationalFunction::normalize(dn, f.den());
    const Polynomial dd = f.den().derivative(v);
    if (dd.is_zero())
        return RationalFunction::normalize(dn, f.den());
    return RationalFunction::normalize(dn * f.den() - f.num() * dd, f.den() * f.den());
}

namespace {

// Homogenized evaluation of p at (nx/dx, ny/dy), scaled by dx^ex * dy^ey.
// Requires ex >= deg_x(p) and ey >= deg_y(p).
Polynomial homogenized_eval(const Polynomial& p, const std::vector<Polynomial>& nx_pow, const std::vector<Polynomial>& dx_pow,
                            const std::vector<Polynomial>& ny_pow, const std::vector<Polynomial>& dy_pow, unsigned ex,
                            unsigned ey)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms())
        out += c * (nx_pow[m.dx] * dx_pow[ex - m.dx] * ny_pow[m.dy] * dy_pow[ey - m.dy]);
    return out;
}

std::vector<Polynomial> powers(const Polynomial& p, unsigned max_exponent)
{
    std::vector<Polynomial> out;
    out.reserve(max_exponent + 1);
    out.emplace_back(1);
    for (unsigned k = 1; k <= max_exponent; ++k)
        out.push_back(out.back() * p);
    return out;
}

} // namespace

RationalFunction substitute(const RationalFunction& f, const RationalFunction& sx, const RationalFunction& sy)
{
    const unsigned ex = std::max(f.num().degree(Var::x), f.den().degree(Var::x));
    const unsigned ey = std::max(f.num().degree(Var::y), f.den().degree(Var::y));
    const auto nx_pow = powers(sx.num(), ex);
    const auto dx_pow = powers(sx.den(), ex);
    const auto ny_pow = powers(sy.num(), ey);
    const auto dy_pow = powers(sy.den(), ey);
    Polynomial den = homogenized_eval(f.den(), nx_pow, dx_pow, ny_pow, dy_pow, ex, ey);
    if (den.is_zero())
        throw Error(ErrorCode::undefined_composition, "substituted denominator vanishes identically");
    Polynomial num = homogenized_eval(f.num(), nx_pow, dx_pow, ny_pow, dy_pow, ex, ey);
    return RationalFunction::normalize(num, den);
}

} // namespace kpalg
