#include "test_support.hpp"

#include "kpalg/error.hpp"
#include "kpalg/isomorphism.hpp"

#include <gtest/gtest.h>

using namespace kpalg;
using namespace kpalg::test;

namespace {

Automorphism shear(const GaussianRational& alpha, std::string_view p) { return ScaleShear{alpha, poly(p)}; }

// A^T phi(g) A written out for A = [[alpha, 0], [p', 1]].
Metric shear_transform_oracle(const Metric& g, const ScaleShear& s)
{
    const RationalFunction x = RationalFunction(Polynomial::term(s.alpha, {1, 0}));
    const RationalFunction y = P("y") + RationalFunction(s.p);
    const RationalFunction a = substitute(g.a, x, y), b = substitute(g.b, x, y), c = substitute(g.c, x, y);
    const RationalFunction dp(s.p.derivative(Var::x));
    const RationalFunction al(s.alpha);
    return {al * al * a + RationalFunction(2) * al * dp * b + dp * dp * c, al * b + dp * c, c};
}

Polynomial in_y(const Polynomial& p_of_x)
{
    Polynomial out;
    for (const auto& [m, c] : p_of_x.terms())
        out += Polynomial::term(c, {0, m.dx});
    return out;
}

void expect_verified(const IsoCertificate& cert, const Metric& g, const Metric& g2)
{
    ASSERT_EQ(cert.verdict, Verdict::isomorphic) << (cert.reason ? *cert.reason : "");
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_TRUE(verify_iso(g, g2, *cert.witness));
}

const Metric kDiagXX2 = Metric::diagonal(P("x"), P("x^2"));
const Metric kShearedX8 = metric("x + x^8", "x^5", "x^2");

} // namespace

TEST(TransformMetric, Examples)
{
    EXPECT_EQ(transform_metric(kDiagXX2, shear(q(1), "x^4/4")), kShearedX8);
    const Metric g = metric("x*y", "1/x", "y^2 + 3");
    EXPECT_EQ(transform_metric(g, Automorphism::identity()), g);
    EXPECT_EQ(transform_metric(Metric::identity(), shear(q(2), "0")), Metric::diagonal(P("4"), P("1")));
}

TEST(TransformMetric, MatchesClosedFormForShears)
{
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const Metric g = rng.polynomial_metric(2, false);
        const ScaleShear s = rng.scale_shear(3, true);
        EXPECT_EQ(transform_metric(g, s), shear_transform_oracle(g, s));
    }
}

TEST(TransformMetric, MobiusResultIsSymmetricAndVerifies)
{
    const Mobius m{q(0), q(1), q(1), q(0), P("2")};
    const Metric g = Metric::diagonal(P("x"), P("1 + x^2"));
    const Metric g2 = transform_metric(g, m);
    EXPECT_TRUE(verify_iso(g, g2, m));
    EXPECT_TRUE(eta_obstruction(g, g2, m));
}

TEST(VerifyIso, Examples)
{
    EXPECT_TRUE(verify_iso(kDiagXX2, kShearedX8, shear(q(1), "x^4/4")));
    EXPECT_FALSE(verify_iso(Metric::identity(), Metric::diagonal(P("1"), P("2")), Automorphism::identity()));
    EXPECT_TRUE(verify_iso(Metric::diagonal(P("y"), P("1 + y^2")), Metric::diagonal(P("y + 2"), P("5 + y^2 + 4*y")),
                           shear(q(1), "2")));
}

TEST(VerifyIso, DegenerateMetric)
{
    try {
        (void)verify_iso(metric("1", "1", "1"), Metric::identity(), Automorphism::identity());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::degenerate_metric);
    }
}

TEST(EtaObstruction, Examples)
{
    const Metric g2 = Metric::diagonal(P("4"), P("1"));
    EXPECT_TRUE(eta_obstruction(Metric::identity(), g2, shear(q(2), "0")));
    EXPECT_TRUE(eta_obstruction(kDiagXX2, kDiagXX2, Automorphism::identity()));
    EXPECT_FALSE(eta_obstruction(Metric::identity(), g2, Automorphism::identity()));
}

TEST(DecideConstant, Examples)
{
    const IsoCertificate a = decide_constant(Metric::identity(), Metric::diagonal(P("4"), P("1")));
    expect_verified(a, Metric::identity(), Metric::diagonal(P("4"), P("1")));
    EXPECT_EQ(a.witness->scale_shear(), (ScaleShear{q(2), Polynomial()}));

    const IsoCertificate b = decide_constant(Metric::identity(), Metric::diagonal(P("1"), P("2")));
    EXPECT_EQ(b.verdict, Verdict::not_isomorphic);
    EXPECT_EQ(b.reason, std::string(reason::c_mismatch));

    const IsoCertificate c = decide_constant(metric("1", "1", "0"), metric("3", "1", "0"));
    expect_verified(c, metric("1", "1", "0"), metric("3", "1", "0"));
    EXPECT_EQ(c.witness->scale_shear(), (ScaleShear{q(1), poly("x")}));

    const IsoCertificate d = decide_constant(Metric::identity(), Metric::diagonal(P("2"), P("1")));
    EXPECT_EQ(d.verdict, Verdict::undecided);
    ASSERT_TRUE(d.constraint.has_value());
    EXPECT_EQ(d.constraint->to_string(), "alpha^2 = 2");
    EXPECT_FALSE(d.witness.has_value());
}

TEST(DecideConstant, GaussianSquareRoot)
{
    // alpha^2 = 2i has the root 1 + i.
    const Metric g2 = Metric::diagonal(P("2*i"), P("1"));
    expect_verified(decide_constant(Metric::identity(), g2), Metric::identity(), g2);
}

TEST(DecideConstant, Errors)
{
    try {
        (void)decide_constant(metric("x", "0", "1"), Metric::identity());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::non_constant_entries);
    }
    EXPECT_THROW((void)decide_constant(metric("1", "1", "1"), Metric::identity()), Error);
}

TEST(CheckXdepSufficient, Examples)
{
    const IsoCertificate a = check_xdep_sufficient(kDiagXX2, kShearedX8, q(1));
    expect_verified(a, kDiagXX2, kShearedX8);
    EXPECT_EQ(a.witness->scale_shear(), (ScaleShear{q(1), poly("x^4/4")}));

    const Metric g = metric("x^2 + 1", "x", "3*x - 2");
    const IsoCertificate b = check_xdep_sufficient(g, g, q(1));
    expect_verified(b, g, g);
    EXPECT_EQ(b.witness->scale_shear(), ScaleShear{});

    const IsoCertificate c = check_xdep_sufficient(kDiagXX2, Metric::diagonal(P("x"), P("x^3")), q(1));
    EXPECT_EQ(c.verdict, Verdict::not_isomorphic);
    EXPECT_EQ(c.reason, std::string(reason::sufficient_fail));
}

TEST(CheckXdepSufficient, ZeroCBranch)
{
    const Metric g = metric("x", "1 + x", "0");
    const ScaleShear phi{q(-2), poly("x^2 - x")};
    const Metric g2 = transform_metric(g, phi);
    const IsoCertificate cert = check_xdep_sufficient(g, g2, q(-2));
    expect_verified(cert, g, g2);
    EXPECT_EQ(cert.witness->scale_shear(), phi);
}

TEST(CheckXdepSufficient, RejectsYDependence)
{
    try {
        (void)check_xdep_sufficient(metric("y", "0", "1"), Metric::identity(), q(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::non_polynomial_entries);
    }
}

TEST(DecideDiagX, Examples)
{
    const Metric g = Metric::diagonal(P("x"), P("1 + x + x^2"));
    const Metric g2 = Metric::diagonal(P("-8*x"), P("1 - 2*x + 4*x^2"));
    const IsoCertificate a = decide_diag_x(g, g2);
    expect_verified(a, g, g2);
    EXPECT_EQ(a.witness->scale_shear(), (ScaleShear{q(-2), Polynomial()}));

    const IsoCertificate b = decide_diag_x(g, g);
    expect_verified(b, g, g);
    EXPECT_EQ(b.witness->scale_shear(), ScaleShear{});

    const IsoCertificate c = decide_diag_x(Metric::diagonal(P("x"), P("1 + x")), Metric::diagonal(P("x"), P("1 + x^2")));
    EXPECT_EQ(c.verdict, Verdict::not_isomorphic);
    EXPECT_EQ(c.reason, std::string(reason::support_mismatch));
}

TEST(DecideDiagX, InconsistentScales)
{
    // c forces alpha = 2, a forces alpha^3 = 1.
    const IsoCertificate cert =
        decide_diag_x(Metric::diagonal(P("x"), P("1 + x")), Metric::diagonal(P("x"), P("1 + 2*x")));
    EXPECT_EQ(cert.verdict, Verdict::not_isomorphic);
    EXPECT_EQ(cert.reason, std::string(reason::no_scale_relation));
}

TEST(DecideDiagX, UndecidedCubeRoot)
{
    // c gives alpha^3 = 2 and a gives alpha^6 = 4.
    const Metric g = Metric::diagonal(P("x^4"), P("1 + x^3"));
    const Metric g2 = Metric::diagonal(P("4*x^4"), P("1 + 2*x^3"));
    const IsoCertificate cert = decide_diag_x(g, g2);
    EXPECT_EQ(cert.verdict, Verdict::undecided);
    ASSERT_TRUE(cert.constraint.has_value());
    EXPECT_EQ(cert.constraint->to_string(), "alpha^3 = 2");
    EXPECT_EQ(cert.reason, std::string(reason::root_not_in_base_field));
}

TEST(DecideDiagX, ExactCubeRoot)
{
    const Metric g = Metric::diagonal(P("x^4"), P("1 + x^3"));
    const Metric g2 = Metric::diagonal(P("64*x^4"), P("1 + 8*x^3"));
    const IsoCertificate cert = decide_diag_x(g, g2);
    expect_verified(cert, g, g2);
    EXPECT_EQ(cert.witness->scale_shear(), (ScaleShear{q(2), Polynomial()}));
}

TEST(DecideDiagX, Errors)
{
    try {
        (void)decide_diag_x(metric("x", "1", "x"), Metric::identity());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_diagonal);
    }
}

TEST(CheckDiagYSufficient, Examples)
{
    const Metric g = Metric::diagonal(P("y"), P("1 + y^2"));
    const Metric g2 = Metric::diagonal(P("y + 2"), P("5 + y^2 + 4*y"));
    const IsoCertificate a = check_diag_y_sufficient(g, g2);
    expect_verified(a, g, g2);
    EXPECT_EQ(a.witness->scale_shear(), (ScaleShear{q(1), poly("2")}));

    const IsoCertificate b = check_diag_y_sufficient(g, g);
    expect_verified(b, g, g);
    EXPECT_EQ(b.witness->scale_shear(), ScaleShear{});

    const Metric h = Metric::diagonal(P("y"), P("y^2"));
    const Metric h2 = Metric::diagonal(P("4*(y + 1)"), P("(y + 1)^2"));
    const IsoCertificate c = check_diag_y_sufficient(h, h2);
    expect_verified(c, h, h2);
    EXPECT_EQ(c.witness->scale_shear(), (ScaleShear{q(2), poly("1")}));
}

TEST(CheckDiagYSufficient, Failure)
{
    const IsoCertificate cert = check_diag_y_sufficient(Metric::diagonal(P("y"), P("1 + y^2")),
                                                        Metric::diagonal(P("y"), P("1 + y^3")));
    EXPECT_EQ(cert.verdict, Verdict::not_isomorphic);
    EXPECT_EQ(cert.reason, std::string(reason::sufficient_fail));
}

TEST(BruteForceIso, Examples)
{
    SearchBounds bounds;
    bounds.alpha_candidates = {q(1), q(-1), q(2), q(-2)};
    const auto a = brute_force_iso(kDiagXX2, kShearedX8, bounds);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(a->scale_shear(), (ScaleShear{q(1), poly("x^4/4")}));
    EXPECT_EQ(a->scale_shear(), check_xdep_sufficient(kDiagXX2, kShearedX8, q(1)).witness->scale_shear());

    const Metric g = metric("x^3", "x", "2 + x");
    const auto b = brute_force_iso(g, g, bounds);
    ASSERT_TRUE(b.has_value());
    EXPECT_EQ(*b, Automorphism::identity());

    EXPECT_FALSE(brute_force_iso(Metric::identity(), Metric::diagonal(P("1"), P("2")), bounds).has_value());
}

TEST(IsomorphismProperties, RoundTripAndTransport)
{
    Rng rng(301);
    for (int trial = 0; trial < 40; ++trial) {
        const Metric g = rng.polynomial_metric(2, false);
        const ScaleShear phi = rng.scale_shear(4, false);
        const Metric g2 = transform_metric(g, phi);
        EXPECT_TRUE(verify_iso(g, g2, phi));
        EXPECT_TRUE(eta_obstruction(g, g2, phi));
    }
}

TEST(IsomorphismProperties, Contravariance)
{
    Rng rng(302);
    for (int trial = 0; trial < 30; ++trial) {
        const Metric g = rng.polynomial_metric(2, false);
        const ScaleShear outer = rng.scale_shear(3, true), inner = rng.scale_shear(3, true);
        EXPECT_EQ(transform_metric(transform_metric(g, inner), outer), transform_metric(g, compose(outer, inner)));
    }
}

TEST(IsomorphismProperties, ConstantClassification)
{
    Rng rng(303);
    for (int trial = 0; trial < 200; ++trial) {
        const Metric g = rng.polynomial_metric(0, true);
        Metric g2 = rng.polynomial_metric(0, true);
        if (rng.coin())
            g2.c = g.c;
        const RationalFunction dg2 = det(g2);
        if (dg2.is_zero())
            continue;
        const IsoCertificate cert = decide_constant(g, g2);
        if (g.c == g2.c) {
            EXPECT_NE(cert.verdict, Verdict::not_isomorphic);
            if (cert.verdict == Verdict::undecided)
                EXPECT_TRUE(cert.constraint.has_value());
        } else {
            EXPECT_EQ(cert.verdict, Verdict::not_isomorphic);
        }
        if (cert.witness)
            EXPECT_TRUE(verify_iso(g, g2, *cert.witness));
    }
}

TEST(IsomorphismProperties, DiagXDeciderAgreesWithTransform)
{
    Rng rng(304);
    const std::vector<GaussianRational> alphas{q(1), q(-1), q(2), q(-2), q(1, 2), q(3), gq(0, 1)};
    for (int trial = 0; trial < 40; ++trial) {
        const Metric g = Metric::diagonal(RationalFunction(rng.nonzero_polynomial(3, true)),
                                          RationalFunction(rng.nonzero_polynomial(3, true)));
        const GaussianRational alpha = alphas[rng.uniform(0, static_cast<int>(alphas.size()) - 1)];
        const Metric g2 = transform_metric(g, ScaleShear{alpha, Polynomial()});
        const IsoCertificate cert = decide_diag_x(g, g2);
        if (cert.verdict == Verdict::undecided) {
            // Only when every constrained exponent is at least 3 and the root is Gaussian.
            EXPECT_GE(cert.constraint->exponent, 3U);
            continue;
        }
        expect_verified(cert, g, g2);
    }
}

TEST(IsomorphismProperties, XdepAndOracleAgreeWithTransform)
{
    Rng rng(305);
    SearchBounds bounds;
    bounds.alpha_candidates = {q(1), q(-1), q(2), q(-2), q(1, 2)};
    for (int trial = 0; trial < 25; ++trial) {
        const Metric g = rng.polynomial_metric(2, true, false);
        const ScaleShear phi{bounds.alpha_candidates[rng.uniform(0, 4)], rng.polynomial(4, true, false, 3)};
        const Metric g2 = transform_metric(g, phi);

        const IsoCertificate cert = check_xdep_sufficient(g, g2, phi.alpha);
        expect_verified(cert, g, g2);

        const auto found = brute_force_iso(g, g2, bounds);
        ASSERT_TRUE(found.has_value());
        EXPECT_TRUE(verify_iso(g, g2, *found));
    }
}

TEST(IsomorphismProperties, DiagYDeciderAgreesWithTransform)
{
    Rng rng(306);
    for (int trial = 0; trial < 30; ++trial) {
        const Metric g = Metric::diagonal(RationalFunction(in_y(rng.nonzero_polynomial(3, true))),
                                          RationalFunction(in_y(rng.nonzero_polynomial(3, true))));
        const ScaleShear phi{q(rng.uniform(1, 3)) * (rng.coin() ? q(1) : q(-1)), Polynomial(rng.scalar())};
        const Metric g2 = transform_metric(g, phi);
        expect_verified(check_diag_y_sufficient(g, g2), g, g2);
    }
}
