#include "kpalg/isomorphism.hpp"

#include "kpalg/error.hpp"
#include "kpalg/expr.hpp"
#include "kpalg/roots.hpp"

#include <set>
#include <stdexcept>

namespace kpalg {

std::string_view to_string(Verdict verdict) noexcept
{
    switch (verdict) {
    case Verdict::isomorphic: return "isomorphic";
    case Verdict::not_isomorphic: return "not_isomorphic";
    case Verdict::undecided: return "undecided";
    }
    return "undecided";
}

std::string ScaleConstraint::to_string() const
{
    return "alpha^" + std::to_string(exponent) + " = " + format_constant(value);
}

IsoCertificate IsoCertificate::isomorphic(Automorphism witness)
{
    IsoCertificate out;
    out.verdict = Verdict::isomorphic;
    out.witness = std::move(witness);
    return out;
}

IsoCertificate IsoCertificate::not_isomorphic(std::string_view reason)
{
    IsoCertificate out;
    out.verdict = Verdict::not_isomorphic;
    out.reason = std::string(reason);
    return out;
}

IsoCertificate IsoCertificate::undecided(ScaleConstraint constraint, std::string_view reason)
{
    IsoCertificate out;
    out.verdict = Verdict::undecided;
    out.constraint = std::move(constraint);
    out.reason = std::string(reason);
    return out;
}

namespace {

void require_nondegenerate(const Metric& g)
{
    if (det(g).is_zero())
        throw Error(ErrorCode::degenerate_metric, "metric determinant vanishes");
}

void require_diagonal(const Metric& g)
{
    if (!g.is_diagonal())
        throw Error(ErrorCode::not_diagonal, "metric has a nonzero off-diagonal entry");
}

// Entry as a polynomial in v alone.
Polynomial univariate_entry(const RationalFunction& f, Var v)
{
    const Var other = v == Var::x ? Var::y : Var::x;
    if (!f.is_polynomial() || f.num().depends_on(other))
        throw Error(ErrorCode::non_polynomial_entries,
                    std::string("metric entry is not a polynomial in ") + (v == Var::x ? "x" : "y") + " alone");
    return f.num() * f.den().constant_term().inverse();
}

struct Entries {
    Polynomial a, b, c;
};

Entries univariate_entries(const Metric& g, Var v)
{
    return {univariate_entry(g.a, v), univariate_entry(g.b, v), univariate_entry(g.c, v)};
}

GaussianRational coeff(const Polynomial& p, Var v, unsigned k)
{
    return p.coefficient(v == Var::x ? Monomial{k, 0} : Monomial{0, k});
}

std::set<unsigned> support(const Polynomial& p, Var v)
{
    std::set<unsigned> out;
    for (const auto& [m, c] : p.terms())
        out.insert(m.degree(v));
    return out;
}

// Antiderivative in x with zero constant term.
Polynomial integrate_x(const Polynomial& p)
{
    Polynomial out;
    for (const auto& [m, c] : p.terms())
        out += Polynomial::term(c / GaussianRational(static_cast<long>(m.dx + 1)), Monomial{m.dx + 1, m.dy});
    return out;
}

Polynomial shift_y(const Polynomial& p, const GaussianRational& lambda)
{
    return substitute(RationalFunction(p), RationalFunction::x(),
                      RationalFunction(Polynomial::y() + Polynomial(lambda)))
        .num();
}

IsoCertificate confirmed(const Metric& g, const Metric& g2, Automorphism witness)
{
    if (!verify_iso(g, g2, witness))
        throw std::logic_error("constructed witness failed verification");
    return IsoCertificate::isomorphic(std::move(witness));
}

// Reduces {alpha^e_i = q_i} to a single alpha^d = q with d = gcd(e_i), or
// nullopt when the system is inconsistent (for alpha != 0).
std::optional<ScaleConstraint> reduce_power_constraints(const std::vector<ScaleConstraint>& constraints)
{
    ScaleConstraint acc = constraints.front();
    for (std::size_t i = 1; i < constraints.size(); ++i) {
        ScaleConstraint other = constraints[i];
        while (other.exponent != 0) {
            const unsigned k = acc.exponent / other.exponent;
            ScaleConstraint rest{acc.exponent % other.exponent, acc.value / other.value.pow(k)};
            acc = std::move(other);
            other = std::move(rest);
        }
        if (!other.value.is_one())
            return std::nullopt;
    }
    return acc;
}

// Solves M u = rhs over Q(i); free unknowns are set to zero.
std::optional<std::vector<GaussianRational>> solve_linear(std::vector<std::vector<GaussianRational>> rows,
                                                          std::size_t unknowns)
{
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        const GaussianRational inv = rows[r][col].inverse();
        for (auto& v : rows[r])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero())
                continue;
            const GaussianRational f = rows[i][col];
            for (std::size_t j = col; j <= unknowns; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (!rows[i][unknowns].is_zero())
            return std::nullopt;
    std::vector<GaussianRational> solution(unknowns);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        solution[pivot_cols[i]] = rows[i][unknowns];
    return solution;
}

// Coefficients u of p' (degree < unknowns) with multiplier * p' = target.
std::optional<Polynomial> solve_for_derivative(const Polynomial& multiplier, const Polynomial& target,
                                               std::size_t unknowns)
{
    if (unknowns == 0)
        return target.is_zero() ? std::optional<Polynomial>(Polynomial()) : std::nullopt;
    const unsigned top = std::max(target.degree(Var::x),
                                  multiplier.degree(Var::x) + static_cast<unsigned>(unknowns) - 1);
    std::vector<std::vector<GaussianRational>> rows(top + 1, std::vector<GaussianRational>(unknowns + 1));
    for (unsigned k = 0; k <= top; ++k) {
        for (std::size_t j = 0; j < unknowns && j <= k; ++j)
            rows[k][j] = multiplier.coefficient({k - static_cast<unsigned>(j), 0});
        rows[k][unknowns] = target.coefficient({k, 0});
    }
    auto u = solve_linear(std::move(rows), unknowns);
    if (!u)
        return std::nullopt;
    Polynomial out;
    for (std::size_t j = 0; j < unknowns; ++j)
        out += Polynomial::term((*u)[j], Monomial{static_cast<unsigned>(j), 0});
    return out;
}

} // namespace

Metric transform_metric(const Metric& g, const Automorphism& phi)
{
    const Matrix2 a = jacobian(phi);
    const Matrix2 out = a.transpose() * apply_auto(phi, g.matrix()) * a;
    return Metric::from_matrix(out);
}

bool verify_iso(const Metric& g, const Metric& g2, const Automorphism& phi)
{
    require_nondegenerate(g);
    require_nondegenerate(g2);
    return is_poisson_auto(phi) && transform_metric(g, phi) == g2;
}

bool eta_obstruction(const Metric& g, const Metric& g2, const Automorphism& phi)
{
    const KPAlgebra source = kp_check(g);
    const KPAlgebra target = kp_check(g2);
    return apply_auto(phi, source.eta) == target.eta;
}

IsoCertificate decide_constant(const Metric& g, const Metric& g2)
{
    for (const auto* f : {&g.a, &g.b, &g.c, &g2.a, &g2.b, &g2.c})
        if (!f->is_constant())
            throw Error(ErrorCode::non_constant_entries, "decide_constant needs constant metric entries");
    require_nondegenerate(g);
    require_nondegenerate(g2);

    const GaussianRational a = g.a.constant_value(), b = g.b.constant_value(), c = g.c.constant_value();
    const GaussianRational a2 = g2.a.constant_value(), b2 = g2.b.constant_value(), c2 = g2.c.constant_value();
    if (!(c == c2))
        return IsoCertificate::not_isomorphic(reason::c_mismatch);

    if (!c.is_zero()) {
        const GaussianRational alpha_sq = (a2 * c - b2 * b2) / (a * c - b * b);
        auto alpha = gaussian_sqrt(alpha_sq);
        if (!alpha)
            return IsoCertificate::undecided({2, alpha_sq}, reason::root_not_in_base_field);
        const GaussianRational slope = (b2 - *alpha * b) / c;
        return confirmed(g, g2, Automorphism(ScaleShear{*alpha, slope * Polynomial::x()}));
    }
    // c = c2 = 0 forces b, b2 != 0.
    const GaussianRational alpha = b2 / b;
    const GaussianRational slope = (a2 * b * b - a * b2 * b2) / (GaussianRational(2) * b * b * b2);
    return confirmed(g, g2, Automorphism(ScaleShear{alpha, slope * Polynomial::x()}));
}

IsoCertificate check_xdep_sufficient(const Metric& g, const Metric& g2, const GaussianRational& alpha)
{
    const Entries e = univariate_entries(g, Var::x);
    const Entries e2 = univariate_entries(g2, Var::x);
    require_nondegenerate(g);
    require_nondegenerate(g2);
    if (alpha.is_zero())
        throw Error(ErrorCode::invalid_argument, "alpha must be nonzero");

    const Polynomial a_s = e.a.scale_variable(Var::x, alpha);
    const Polynomial b_s = e.b.scale_variable(Var::x, alpha);
    const Polynomial c_s = e.c.scale_variable(Var::x, alpha);
    const GaussianRational alpha_sq = alpha * alpha;

    std::optional<Polynomial> shift_derivative;
    if (!e.c.is_zero()) {
        if (!(e2.c == c_s))
            return IsoCertificate::not_isomorphic(reason::sufficient_fail);
        shift_derivative = divide_exact(e2.b - alpha * b_s, c_s);
        if (!shift_derivative)
            return IsoCertificate::not_isomorphic(reason::sufficient_fail);
        if (!((e2.a - alpha_sq * a_s) * c_s == e2.b * e2.b - alpha_sq * b_s * b_s))
            return IsoCertificate::not_isomorphic(reason::sufficient_fail);
    } else {
        if (!e2.c.is_zero() || !(e2.b == alpha * b_s))
            return IsoCertificate::not_isomorphic(reason::sufficient_fail);
        shift_derivative = divide_exact(e2.a - alpha_sq * a_s, GaussianRational(2) * alpha * b_s);
        if (!shift_derivative)
            return IsoCertificate::not_isomorphic(reason::sufficient_fail);
    }
    return confirmed(g, g2, Automorphism(ScaleShear{alpha, integrate_x(*shift_derivative)}));
}

IsoCertificate decide_diag_x(const Metric& g, const Metric& g2)
{
    require_diagonal(g);
    require_diagonal(g2);
    const Entries e = univariate_entries(g, Var::x);
    const Entries e2 = univariate_entries(g2, Var::x);
    require_nondegenerate(g);
    require_nondegenerate(g2);

    if (support(e.c, Var::x) != support(e2.c, Var::x) || support(e.a, Var::x) != support(e2.a, Var::x))
        return IsoCertificate::not_isomorphic(reason::support_mismatch);

    // c2_k = alpha^k c_k and a2_k = alpha^(k+2) a_k.
    std::vector<ScaleConstraint> constraints;
    for (unsigned k : support(e.c, Var::x)) {
        const GaussianRational ratio = coeff(e2.c, Var::x, k) / coeff(e.c, Var::x, k);
        if (k == 0) {
            if (!ratio.is_one())
                return IsoCertificate::not_isomorphic(reason::no_scale_relation);
            continue;
        }
        constraints.push_back({k, ratio});
    }
    for (unsigned k : support(e.a, Var::x))
        constraints.push_back({k + 2, coeff(e2.a, Var::x, k) / coeff(e.a, Var::x, k)});

    const auto reduced = reduce_power_constraints(constraints);
    if (!reduced)
        return IsoCertificate::not_isomorphic(reason::no_scale_relation);

    const auto roots = base_field_roots(reduced->value, reduced->exponent);
    if (roots.empty())
        return IsoCertificate::undecided(*reduced, reason::root_not_in_base_field);
    for (const auto& alpha : roots) {
        if (e2.c == e.c.scale_variable(Var::x, alpha)
            && e2.a == alpha * alpha * e.a.scale_variable(Var::x, alpha))
            return confirmed(g, g2, Automorphism(ScaleShear{alpha, Polynomial()}));
    }
    return IsoCertificate::not_isomorphic(reason::no_scale_relation);
}

IsoCertificate check_diag_y_sufficient(const Metric& g, const Metric& g2)
{
    require_diagonal(g);
    require_diagonal(g2);
    const Entries e = univariate_entries(g, Var::y);
    const Entries e2 = univariate_entries(g2, Var::y);
    require_nondegenerate(g);
    require_nondegenerate(g2);

    if (e.a.is_constant() && e.c.is_constant() && e2.a.is_constant() && e2.c.is_constant())
        return decide_constant(g, g2);

    const auto fail = [] { return IsoCertificate::not_isomorphic(reason::sufficient_fail); };
    const unsigned m = e.a.degree(Var::y);
    if (e2.a.degree(Var::y) != m)
        return fail();
    const GaussianRational a_lead = coeff(e.a, Var::y, m);
    const GaussianRational alpha_sq = coeff(e2.a, Var::y, m) / a_lead;

    GaussianRational lambda;
    if (!e.c.is_constant()) {
        const unsigned n = e.c.degree(Var::y);
        if (e2.c.degree(Var::y) != n)
            return fail();
        lambda = (coeff(e2.c, Var::y, n - 1) - coeff(e.c, Var::y, n - 1))
                 / (GaussianRational(static_cast<long>(n)) * coeff(e.c, Var::y, n));
        if (!(e2.c == shift_y(e.c, lambda)))
            return fail();
    } else {
        // a is nonconstant here; the shift comes from its subleading coefficient.
        if (!(e2.c == e.c) || m == 0)
            return fail();
        lambda = (coeff(e2.a, Var::y, m - 1) / alpha_sq - coeff(e.a, Var::y, m - 1))
                 / (GaussianRational(static_cast<long>(m)) * a_lead);
    }
    if (!(e2.a == alpha_sq * shift_y(e.a, lambda)))
        return fail();

    auto alpha = gaussian_sqrt(alpha_sq);
    if (!alpha)
        return IsoCertificate::undecided({2, alpha_sq}, reason::root_not_in_base_field);
    return confirmed(g, g2, Automorphism(ScaleShear{*alpha, Polynomial(lambda)}));
}

std::optional<Automorphism> brute_force_iso(const Metric& g, const Metric& g2, const SearchBounds& bounds)
{
    if (bounds.max_p_degree > SearchBounds::max_supported_degree)
        throw Error(ErrorCode::invalid_argument, "max_p_degree exceeds the supported bound");
    const Entries e = univariate_entries(g, Var::x);
    const Entries e2 = univariate_entries(g2, Var::x);
    require_nondegenerate(g);
    require_nondegenerate(g2);

    for (const auto& alpha : bounds.alpha_candidates) {
        if (alpha.is_zero())
            continue;
        const Polynomial a_s = e.a.scale_variable(Var::x, alpha);
        const Polynomial b_s = e.b.scale_variable(Var::x, alpha);
        const Polynomial c_s = e.c.scale_variable(Var::x, alpha);
        if (!(e2.c == c_s))
            continue;
        // Off-diagonal: b2 = alpha b(alpha x) + p' c(alpha x). When c = 0 the
        // diagonal entry a2 = alpha^2 a(alpha x) + 2 alpha p' b(alpha x) is linear instead.
        std::optional<Polynomial> derivative;
        if (!c_s.is_zero()) {
            derivative = solve_for_derivative(c_s, e2.b - alpha * b_s, bounds.max_p_degree);
        } else {
            derivative = solve_for_derivative(GaussianRational(2) * alpha * b_s, e2.a - alpha * alpha * a_s,
                                              bounds.max_p_degree);
        }
        if (!derivative)
            continue;
        Automorphism candidate(ScaleShear{alpha, integrate_x(*derivative)});
        if (verify_iso(g, g2, candidate))
            return candidate;
    }
    return std::nullopt;
}

} // namespace kpalg
