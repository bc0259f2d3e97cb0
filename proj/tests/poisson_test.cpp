#include "test_support.hpp"

#include "kpalg/error.hpp"

#include <gtest/gtest.h>

using namespace kpalg;
using namespace kpalg::test;

namespace {

// Term-wise derivative, kept separate from the library's rational calculus.
Polynomial d(const Polynomial& p, Var v)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned e = m.degree(v);
        if (e == 0)
            continue;
        Monomial n = m;
        (v == Var::x ? n.dx : n.dy) -= 1;
        out += Polynomial::term(c * GaussianRational(static_cast<long>(e)), n);
    }
    return out;
}

Polynomial polynomial_bracket(const Polynomial& f, const Polynomial& g, const GaussianRational& lambda,
                              const GaussianRational& mu)
{
    const Polynomial xy = Polynomial::term(lambda, {1, 0}) + Polynomial::term(mu, {0, 1});
    return (d(f, Var::x) * d(g, Var::y) - d(f, Var::y) * d(g, Var::x)) * xy;
}

} // namespace

TEST(Bracket, GeneratorsGiveX)
{
    EXPECT_EQ(bracket(P("x"), P("y")), P("x"));
}

TEST(Bracket, XCommutesWithPolynomialsInX)
{
    EXPECT_EQ(bracket(P("x"), P("1 + x^5")), RationalFunction());
}

TEST(Bracket, InverseOfX)
{
    const RationalFunction r = bracket(P("1/x"), P("y"));
    EXPECT_EQ(r, P("-1/x"));
    // Leibniz on x * (1/x) = 1: 0 = {x,y}/x + x*{1/x,y}.
    EXPECT_EQ(bracket(P("x"), P("y")) * P("1/x") + P("x") * r, RationalFunction());
}

TEST(Bracket, GeneralStructure)
{
    const PoissonStructure s(q(2), q(-3));
    EXPECT_EQ(bracket(P("x"), P("y"), s), P("2*x - 3*y"));
    EXPECT_EQ(bracket(P("y"), P("x"), s), P("3*y - 2*x"));
    EXPECT_EQ(bracket(P("7"), P("x^2 + y"), s), RationalFunction());
}

TEST(Bracket, InvalidStructure)
{
    try {
        PoissonStructure s(q(0), q(0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::invalid_argument);
    }
}

TEST(Bracket, MatchesTermwiseOracleOnPolynomials)
{
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = rng.polynomial(4), g = rng.polynomial(4);
        GaussianRational lambda = rng.scalar(), mu = rng.nonzero_scalar();
        const PoissonStructure s(lambda, mu);
        EXPECT_EQ(bracket(RationalFunction(f), RationalFunction(g), s),
                  RationalFunction(polynomial_bracket(f, g, lambda, mu)));
    }
}

TEST(NormalizeToCanonical, Examples)
{
    const LinearMap a = normalize_to_canonical(PoissonStructure(q(0), q(3)));
    EXPECT_EQ(a.image_x(), P("-3*y"));
    EXPECT_EQ(a.image_y(), P("x"));

    const LinearMap b = normalize_to_canonical(PoissonStructure(q(2), q(5)));
    EXPECT_EQ(b.image_x(), P("x - 5*y"));
    EXPECT_EQ(b.image_y(), P("2*y"));

    const LinearMap c = normalize_to_canonical(PoissonStructure::canonical());
    EXPECT_EQ(c.image_x(), P("x"));
    EXPECT_EQ(c.image_y(), P("y"));
}

TEST(NormalizeToCanonical, MorphismIdentityOnRandomStructures)
{
    Rng rng(50);
    for (int trial = 0; trial < 50; ++trial) {
        GaussianRational lambda = rng.coin(0.2) ? GaussianRational() : rng.scalar();
        const GaussianRational mu = lambda.is_zero() ? rng.nonzero_scalar() : rng.scalar();
        const PoissonStructure s(lambda, mu);
        const LinearMap phi = normalize_to_canonical(s);
        EXPECT_FALSE(phi.linear_determinant().is_zero());
        EXPECT_EQ(bracket(phi.image_x(), phi.image_y()), phi.apply(s.xy_bracket()));
    }
}

TEST(NormalizeToCanonical, TransportsBracketOfArbitraryElements)
{
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const PoissonStructure s(rng.nonzero_scalar(), rng.scalar());
        const LinearMap phi = normalize_to_canonical(s);
        const RationalFunction f = rng.rational(2), g = rng.rational(2);
        EXPECT_EQ(bracket(phi.apply(f), phi.apply(g)), phi.apply(bracket(f, g, s)));
    }
}

TEST(BracketProperties, Antisymmetry)
{
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = rng.rational(3), g = rng.rational(3);
        EXPECT_EQ(bracket(f, g), -bracket(g, f));
    }
}

TEST(BracketProperties, Leibniz)
{
    Rng rng(102);
    for (int trial = 0; trial < 40; ++trial) {
        const RationalFunction f = rng.rational(3), g = rng.rational(3), h = rng.rational(3);
        EXPECT_EQ(bracket(f, g * h), bracket(f, g) * h + g * bracket(f, h));
    }
}

TEST(BracketProperties, Jacobi)
{
    Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalFunction f = rng.rational(2), g = rng.rational(2), h = rng.rational(2);
        const PoissonStructure s(rng.scalar(), rng.nonzero_scalar());
        EXPECT_EQ(bracket(f, bracket(g, h, s), s) + bracket(g, bracket(h, f, s), s) + bracket(h, bracket(f, g, s), s),
                  RationalFunction());
    }
}
