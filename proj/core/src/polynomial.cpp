#include "kpalg/polynomial.hpp"

#include "kpalg/error.hpp"

#include "modular_gcd.hpp"

#include <algorithm>
#include <tuple>
#include <utility>
#include <vector>

namespace kpalg {

Polynomial::Polynomial(long constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, GaussianRational(constant));
}

Polynomial::Polynomial(const GaussianRational& constant)
{
    if (!constant.is_zero())
        terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Var v)
{
    return term(GaussianRational(1), v == Var::x ? Monomial{1, 0} : Monomial{0, 1});
}

Polynomial Polynomial::term(const GaussianRational& coefficient, Monomial m)
{
    Polynomial p;
    if (!coefficient.is_zero())
        p.terms_.emplace(m, coefficient);
    return p;
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

bool Polynomial::depends_on(Var v) const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first.degree(v) != 0; });
}

unsigned Polynomial::degree(Var v) const noexcept
{
    if (v == Var::x)
        return terms_.empty() ? 0 : terms_.rbegin()->first.dx;
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.dy);
    return d;
}

unsigned Polynomial::total_degree() const noexcept
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

unsigned Polynomial::min_degree(Var v) const noexcept
{
    if (terms_.empty())
        return 0;
    unsigned d = terms_.begin()->first.degree(v);
    for (const auto& [m, c] : terms_)
        d = std::min(d, m.degree(v));
    return d;
}

const Monomial& Polynomial::leading_monomial() const
{
    return terms_.rbegin()->first;
}

const GaussianRational& Polynomial::leading_coefficient() const
{
    return terms_.rbegin()->second;
}

GaussianRational Polynomial::coefficient(Monomial m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational() : it->second;
}

Polynomial Polynomial::coefficient_x(unsigned k) const
{
    Polynomial out;
    auto first = terms_.lower_bound(Monomial{k, 0});
    for (auto it = first; it != terms_.end() && it->first.dx == k; ++it)
        out.terms_.emplace_hint(out.terms_.end(), Monomial{0, it->first.dy}, it->second);
    return out;
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty() || leading_coefficient().is_one())
        return *this;
    GaussianRational inv = leading_coefficient().inverse();
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_)
        c *= inv;
    return out;
}

Polynomial Polynomial::derivative(Var v) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.degree(v);
        if (e == 0)
            continue;
        Monomial dm = m;
        (v == Var::x ? dm.dx : dm.dy) -= 1;
        out.terms_.emplace(dm, c * GaussianRational(static_cast<long>(e)));
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

Polynomial Polynomial::scale_variable(Var v, const GaussianRational& s) const
{
    if (s.is_zero()) {
        Polynomial out;
        for (const auto& [m, c] : terms_)
            if (m.degree(v) == 0)
                out.terms_.emplace(m, c);
        return out;
    }
    Polynomial out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, c * s.pow(m.degree(v)));
    return out;
}

GaussianRational Polynomial::evaluate(const GaussianRational& x, const GaussianRational& y) const
{
    GaussianRational sum;
    for (const auto& [m, c] : terms_)
        sum += c * x.pow(m.dx) * y.pow(m.dy);
    return sum;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

namespace {

// Coefficients scaled to Gaussian integers by a common denominator.
struct IntegerForm {
    mpz_class denominator = 1;
    std::vector<std::tuple<Monomial, mpz_class, mpz_class>> terms;
};

IntegerForm integer_form(const Polynomial::TermMap& terms)
{
    IntegerForm out;
    for (const auto& [m, c] : terms) {
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.im().get_den_mpz_t());
    }
    out.terms.reserve(terms.size());
    for (const auto& [m, c] : terms) {
        mpz_class re = out.denominator / c.re().get_den() * c.re().get_num();
        mpz_class im = out.denominator / c.im().get_den() * c.im().get_num();
        out.terms.emplace_back(m, std::move(re), std::move(im));
    }
    return out;
}

} // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    if (a.is_zero() || b.is_zero())
        return out;
    if (a.is_constant())
        return b * a.constant_term();
    if (b.is_constant())
        return a * b.constant_term();

    const IntegerForm fa = integer_form(a.terms_);
    const IntegerForm fb = integer_form(b.terms_);
    std::map<Monomial, std::pair<mpz_class, mpz_class>> acc;
    mpz_class t;
    for (const auto& [ma, ra, ia] : fa.terms) {
        for (const auto& [mb, rb, ib] : fb.terms) {
            auto& [re, im] = acc[Monomial{ma.dx + mb.dx, ma.dy + mb.dy}];
            mpz_addmul(re.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
            mpz_submul(re.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
            mpz_addmul(im.get_mpz_t(), ra.get_mpz_t(), ib.get_mpz_t());
            mpz_addmul(im.get_mpz_t(), ia.get_mpz_t(), rb.get_mpz_t());
        }
    }
    const mpz_class den = fa.denominator * fb.denominator;
    for (auto& [m, c] : acc) {
        if (c.first == 0 && c.second == 0)
            continue;
        mpq_class re(c.first, den), im(c.second, den);
        re.canonicalize();
        im.canonicalize();
        out.terms_.emplace_hint(out.terms_.end(), m, GaussianRational(re, im));
    }
    return out;
}

Polynomial operator-(const Polynomial& a)
{
    Polynomial out = a;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor)
{
    if (divisor.is_zero())
        throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
    Polynomial quotient;
    Polynomial rem = dividend;
    const Monomial lead = divisor.leading_monomial();
    const GaussianRational lead_inv = divisor.leading_coefficient().inverse();
    while (!rem.is_zero()) {
        const Monomial m = rem.leading_monomial();
        if (!lead.divides(m))
            return std::nullopt;
        const Monomial shift{m.dx - lead.dx, m.dy - lead.dy};
        const GaussianRational factor = rem.leading_coefficient() * lead_inv;
        rem -= Polynomial::term(factor, shift) * divisor;
        quotient += Polynomial::term(factor, shift);
    }
    return quotient;
}

namespace {

// Remainder in y; both arguments have no x-dependence.
Polynomial remainder_y(Polynomial a, const Polynomial& b)
{
    const unsigned db = b.degree(Var::y);
    const GaussianRational lead_inv = b.leading_coefficient().inverse();
    while (!a.is_zero() && a.degree(Var::y) >= db) {
        const Monomial m = a.leading_monomial();
        a -= Polynomial::term(a.leading_coefficient() * lead_inv, Monomial{0, m.dy - db}) * b;
    }
    return a;
}

Polynomial gcd_y(Polynomial a, Polynomial b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Polynomial(1);
    if (a.degree(Var::y) < b.degree(Var::y))
        std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = remainder_y(a, b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Polynomial> x_coefficients(const Polynomial& p)
{
    std::vector<Polynomial> out;
    const auto& terms = p.terms();
    for (auto it = terms.begin(); it != terms.end();) {
        const unsigned k = it->first.dx;
        Polynomial c;
        for (; it != terms.end() && it->first.dx == k; ++it)
            c += Polynomial::term(it->second, Monomial{0, it->first.dy});
        out.push_back(std::move(c));
    }
    return out;
}

// Content with respect to x: gcd over Q(i)[y] of the x-coefficients.
Polynomial content_x(const Polynomial& p)
{
    auto coeffs = x_coefficients(p);
    // Low-degree coefficients first shortens the Euclid runs.
    std::sort(coeffs.begin(), coeffs.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.degree(Var::y) < b.degree(Var::y); });
    Polynomial g;
    for (const auto& c : coeffs) {
        g = gcd_y(g, c);
        if (g.is_constant())
            return Polynomial(1);
    }
    return g;
}

Polynomial primitive_part_x(const Polynomial& p)
{
    if (p.degree(Var::x) == 0)
        return Polynomial(1);
    Polynomial c = content_x(p);
    if (c.is_constant())
        return p.monic();
    return divide_exact(p, c)->monic();
}

// Sparse pseudo-remainder of a by b in x over Q(i)[y].
Polynomial pseudo_remainder_x(Polynomial a, const Polynomial& b)
{
    const unsigned db = b.degree(Var::x);
    const Polynomial lead_b = b.coefficient_x(db);
    while (!a.is_zero() && a.degree(Var::x) >= db) {
        const unsigned da = a.degree(Var::x);
        Polynomial lead_a = a.coefficient_x(da);
        a = lead_b * a - Polynomial::term(GaussianRational(1), Monomial{da - db, 0}) * lead_a * b;
    }
    return a;
}

Polynomial prs_gcd(const Polynomial& p, const Polynomial& q);

Polynomial monomial_gcd(const Monomial& m, const Polynomial& q)
{
    return Polynomial::term(GaussianRational(1),
                            Monomial{std::min(m.dx, q.min_degree(Var::x)), std::min(m.dy, q.min_degree(Var::y))});
}

} // namespace

Polynomial gcd(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() && q.is_zero())
        throw Error(ErrorCode::both_zero, "gcd of two zero polynomials");
    if (p.is_zero())
        return q.monic();
    if (q.is_zero())
        return p.monic();
    if (p.is_constant() || q.is_constant())
        return Polynomial(1);
    if (p.is_monomial())
        return monomial_gcd(p.leading_monomial(), q);
    if (q.is_monomial())
        return monomial_gcd(q.leading_monomial(), p);
    if (p == q)
        return p.monic();
    if (!p.depends_on(Var::x) && !q.depends_on(Var::x))
        return gcd_y(p, q);
    if (auto g = detail::modular_gcd(p, q))
        return std::move(g->gcd);
    return prs_gcd(p, q);
}

namespace {

Polynomial prs_gcd(const Polynomial& p, const Polynomial& q)
{
    const Polynomial content = gcd_y(content_x(p), content_x(q));

    Polynomial a = primitive_part_x(p);
    Polynomial b = primitive_part_x(q);
    if (a.degree(Var::x) < b.degree(Var::x))
        std::swap(a, b);
    while (true) {
        if (b.degree(Var::x) == 0) {
            // b is a unit once its y-content is removed.
            b = Polynomial(1);
            break;
        }
        Polynomial r = pseudo_remainder_x(a, b);
        if (r.is_zero())
            break;
        a = std::move(b);
        b = primitive_part_x(r);
    }
    return (content * b).monic();
}

} // namespace

GcdCofactors gcd_cofactors(const Polynomial& p, const Polynomial& q)
{
    const bool trivial = p.is_zero() || q.is_zero() || p.is_constant() || q.is_constant() || p.is_monomial() ||
                         q.is_monomial() || p == q || (!p.depends_on(Var::x) && !q.depends_on(Var::x));
    if (!trivial) {
        if (auto g = detail::modular_gcd(p, q))
            return std::move(*g);
    }
    GcdCofactors out{trivial ? gcd(p, q) : prs_gcd(p, q), p, q};
    if (out.gcd != Polynomial(1)) {
        out.first = *divide_exact(p, out.gcd);
        out.second = *divide_exact(q, out.gcd);
    }
    return out;
}

} // namespace kpalg
