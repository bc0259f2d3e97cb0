#include "modular_gcd.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace kpalg::detail {

namespace {

using u64 = std::uint64_t;

// Dense univariate, low degree first, no trailing zeros.
using Poly1 = std::vector<u64>;
// Index is the x exponent; entries are polynomials in y.
using Poly2 = std::vector<Poly1>;

struct Field {
    u64 p;

    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p - b); }
    // p < 2^31, so products fit in 64 bits.
    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }

    u64 pow(u64 a, u64 e) const
    {
        u64 r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1)
                r = mul(r, a);
        return r;
    }

    u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(Poly1& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

void trim(Poly2& a)
{
    while (!a.empty() && a.back().empty())
        a.pop_back();
}

int deg(const Poly1& a) { return static_cast<int>(a.size()) - 1; }

u64 eval(const Field& f, const Poly1& a, u64 t)
{
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        r = f.add(f.mul(r, t), *it);
    return r;
}

Poly1 scale(const Field& f, Poly1 a, u64 s)
{
    for (auto& c : a)
        c = f.mul(c, s);
    trim(a);
    return a;
}

Poly1 monic(const Field& f, Poly1 a)
{
    if (a.empty() || a.back() == 1)
        return a;
    return scale(f, std::move(a), f.inv(a.back()));
}

Poly1 mul(const Field& f, const Poly1& a, const Poly1& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly1 out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    trim(out);
    return out;
}

// a = quotient * b + remainder; b nonzero.
void divmod(const Field& f, Poly1 a, const Poly1& b, Poly1* quotient, Poly1& remainder)
{
    const u64 lead_inv = f.inv(b.back());
    Poly1 q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (deg(a) >= deg(b)) {
        const std::size_t shift = a.size() - b.size();
        const u64 factor = f.mul(a.back(), lead_inv);
        q[shift] = factor;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = f.sub(a[shift + j], f.mul(factor, b[j]));
        trim(a);
    }
    if (quotient) {
        trim(q);
        *quotient = std::move(q);
    }
    remainder = std::move(a);
}

Poly1 gcd(const Field& f, Poly1 a, Poly1 b)
{
    while (!b.empty()) {
        Poly1 r;
        divmod(f, std::move(a), b, nullptr, r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, std::move(a));
}

// Quotient when b divides a exactly.
std::optional<Poly1> divide(const Field& f, const Poly1& a, const Poly1& b)
{
    Poly1 q, r;
    divmod(f, a, b, &q, r);
    if (!r.empty())
        return std::nullopt;
    return q;
}

Poly1 content_x(const Field& f, const Poly2& a)
{
    Poly1 g;
    for (const auto& c : a) {
        g = gcd(f, std::move(g), c);
        if (g.size() == 1)
            break;
    }
    return g;
}

Poly1 at_y(const Field& f, const Poly2& a, u64 t)
{
    Poly1 out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        out[k] = eval(f, a[k], t);
    trim(out);
    return out;
}

int deg_y(const Poly2& a)
{
    int d = -1;
    for (const auto& c : a)
        d = std::max(d, deg(c));
    return d;
}

// Exact division test in F[y][x].
bool divides(const Field& f, const Poly2& divisor, Poly2 a)
{
    const std::size_t db = divisor.size() - 1;
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        auto factor = divide(f, a.back(), divisor.back());
        if (!factor)
            return false;
        for (std::size_t j = 0; j <= db; ++j) {
            Poly1 prod = mul(f, *factor, divisor[j]);
            Poly1& target = a[shift + j];
            target.resize(std::max(target.size(), prod.size()), 0);
            for (std::size_t k = 0; k < prod.size(); ++k)
                target[k] = f.sub(target[k], prod[k]);
            trim(target);
        }
        trim(a);
    }
    return a.empty();
}

// Newton interpolation through (points[j], values[j]).
Poly1 interpolate(const Field& f, const std::vector<u64>& points, const std::vector<u64>& values)
{
    const std::size_t n = points.size();
    std::vector<u64> coef(values);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            coef[i] = f.mul(f.sub(coef[i], coef[i - 1]), f.inv(f.sub(points[i], points[i - j])));
    Poly1 out{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // out = out * (y - points[i]) + coef[i]
        Poly1 next(out.size() + 1, 0);
        for (std::size_t k = 0; k < out.size(); ++k) {
            next[k + 1] = f.add(next[k + 1], out[k]);
            next[k] = f.sub(next[k], f.mul(out[k], points[i]));
        }
        next[0] = f.add(next[0], coef[i]);
        out = std::move(next);
    }
    trim(out);
    return out;
}

// gcd of two x-primitive polynomials of positive x-degree, up to a unit.
std::optional<Poly2> primitive_gcd(const Field& f, const Poly2& a, const Poly2& b)
{
    const Poly1 gamma = gcd(f, a.back(), b.back());
    const std::size_t needed = static_cast<std::size_t>(deg(gamma) + std::min(deg_y(a), deg_y(b)) + 1);

    int current = static_cast<int>(std::min(a.size(), b.size()));
    std::vector<u64> points;
    std::vector<Poly1> images;
    u64 t = 0;
    for (int budget = 0; budget < 4 * static_cast<int>(needed) + 64; ++budget) {
        t = f.add(t, 1);
        const u64 gt = eval(f, gamma, t);
        if (eval(f, a.back(), t) == 0 || eval(f, b.back(), t) == 0)
            continue;
        Poly1 image = gcd(f, at_y(f, a, t), at_y(f, b, t));
        if (deg(image) == 0)
            return Poly2{Poly1{1}};
        if (deg(image) > current)
            continue;
        if (deg(image) < current) {
            current = deg(image);
            points.clear();
            images.clear();
        }
        points.push_back(t);
        images.push_back(scale(f, std::move(image), gt));
        if (points.size() < needed)
            continue;

        Poly2 h(static_cast<std::size_t>(current) + 1);
        std::vector<u64> values(points.size());
        for (std::size_t k = 0; k < h.size(); ++k) {
            for (std::size_t j = 0; j < points.size(); ++j)
                values[j] = k < images[j].size() ? images[j][k] : 0;
            h[k] = interpolate(f, points, values);
        }
        trim(h);
        const Poly1 c = content_x(f, h);
        for (auto& entry : h)
            entry = *divide(f, entry, c);
        if (divides(f, h, a) && divides(f, h, b))
            return h;
        points.clear();
        images.clear();
    }
    return std::nullopt;
}

std::optional<Poly2> gcd2(const Field& f, Poly2 a, Poly2 b)
{
    const Poly1 ca = content_x(f, a);
    const Poly1 cb = content_x(f, b);
    Poly1 c = gcd(f, ca, cb);
    for (auto& entry : a)
        entry = *divide(f, entry, ca);
    for (auto& entry : b)
        entry = *divide(f, entry, cb);

    Poly2 h{Poly1{1}};
    if (a.size() > 1 && b.size() > 1) {
        auto g = primitive_gcd(f, a, b);
        if (!g)
            return std::nullopt;
        h = std::move(*g);
    }
    for (auto& entry : h)
        entry = mul(f, entry, c);
    const u64 lead_inv = f.inv(h.back().back());
    for (auto& entry : h)
        entry = scale(f, std::move(entry), lead_inv);
    return h;
}

std::optional<u64> reduce(const Field& f, const mpq_class& q)
{
    const u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), f.p);
    if (den == 0)
        return std::nullopt;
    return f.mul(mpz_fdiv_ui(q.get_num_mpz_t(), f.p), f.inv(den));
}

// Image under i -> s; nullopt when a denominator or the leading coefficient vanishes.
std::optional<Poly2> image(const Field& f, const Polynomial& p, u64 s)
{
    Poly2 out(p.degree(Var::x) + 1);
    for (const auto& [m, c] : p.terms()) {
        auto re = reduce(f, c.re());
        auto im = reduce(f, c.im());
        if (!re || !im)
            return std::nullopt;
        Poly1& entry = out[m.dx];
        if (entry.size() <= m.dy)
            entry.resize(m.dy + 1, 0);
        entry[m.dy] = f.add(*re, f.mul(*im, s));
    }
    for (auto& entry : out)
        trim(entry);
    if (out.back().empty() || out.back().size() != p.coefficient_x(p.degree(Var::x)).degree(Var::y) + 1)
        return std::nullopt;
    return out;
}

struct Prime {
    u64 p;
    u64 sqrt_minus_one;
};

const std::vector<Prime>& primes()
{
    static const std::vector<Prime> list = [] {
        std::vector<Prime> out;
        mpz_class candidate = (mpz_class(1) << 31) - 3;
        while (out.size() < 256) {
            candidate -= 4;
            if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0)
                continue;
            const Field f{candidate.get_ui()};
            for (u64 c = 2;; ++c) {
                const u64 s = f.pow(c, (f.p - 1) / 4);
                if (f.mul(s, s) == f.p - 1) {
                    out.push_back({f.p, s});
                    break;
                }
            }
        }
        return out;
    }();
    return list;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m)
{
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(m / 2).get_mpz_t());
    mpz_class r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class quotient = r0 / r1;
        mpz_class r2 = r0 - quotient * r1;
        mpz_class t2 = t0 - quotient * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1 == 0 || abs(t1) > bound)
        return std::nullopt;
    mpq_class out(r1, t1);
    out.canonicalize();
    return out;
}

struct Accumulator {
    mpz_class modulus = 1;
    std::map<Monomial, std::pair<mpz_class, mpz_class>> coefficients;

    void add(u64 p, const std::map<Monomial, std::pair<u64, u64>>& residues)
    {
        std::map<Monomial, std::pair<mpz_class, mpz_class>> merged;
        auto lift = [&](const mpz_class& old, u64 residue) {
            // x = old + modulus * ((residue - old) * modulus^-1 mod p)
            const Field f{p};
            const u64 old_mod = mpz_fdiv_ui(old.get_mpz_t(), p);
            const u64 m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), p);
            const u64 k = f.mul(f.sub(residue, old_mod), f.inv(m_mod));
            return mpz_class(old + modulus * mpz_class(static_cast<unsigned long>(k)));
        };
        std::map<Monomial, std::pair<mpz_class, mpz_class>> all = coefficients;
        for (const auto& [m, r] : residues)
            all.try_emplace(m, mpz_class(0), mpz_class(0));
        for (const auto& [m, old] : all) {
            auto it = residues.find(m);
            const u64 re = it == residues.end() ? 0 : it->second.first;
            const u64 im = it == residues.end() ? 0 : it->second.second;
            merged[m] = {lift(old.first, re), lift(old.second, im)};
        }
        coefficients = std::move(merged);
        modulus *= mpz_class(static_cast<unsigned long>(p));
    }

    std::optional<Polynomial> reconstruct() const
    {
        Polynomial out;
        for (const auto& [m, c] : coefficients) {
            auto re = rational_reconstruct(c.first, modulus);
            auto im = rational_reconstruct(c.second, modulus);
            if (!re || !im)
                return std::nullopt;
            out += Polynomial::term(GaussianRational(*re, *im), m);
        }
        return out;
    }
};

std::map<Monomial, u64> sparse(const Poly2& a)
{
    std::map<Monomial, u64> out;
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t j = 0; j < a[k].size(); ++j)
            if (a[k][j] != 0)
                out[Monomial{static_cast<unsigned>(k), static_cast<unsigned>(j)}] = a[k][j];
    return out;
}

} // namespace

std::optional<GcdCofactors> modular_gcd(const Polynomial& p, const Polynomial& q)
{
    Accumulator acc;
    std::optional<Monomial> best;
    std::optional<Polynomial> previous;

    for (const Prime& prime : primes()) {
        const Field f{prime.p};
        const u64 s1 = prime.sqrt_minus_one;
        const u64 s2 = f.neg(s1);
        auto a1 = image(f, p, s1), b1 = image(f, q, s1);
        auto a2 = image(f, p, s2), b2 = image(f, q, s2);
        if (!a1 || !b1 || !a2 || !b2)
            continue;
        auto g1 = gcd2(f, std::move(*a1), std::move(*b1));
        auto g2 = gcd2(f, std::move(*a2), std::move(*b2));
        if (!g1 || !g2)
            continue;
        if (g1->size() == 1 && g1->front().size() == 1)
            return GcdCofactors{Polynomial(1), p, q};

        const auto m1 = sparse(*g1);
        const auto m2 = sparse(*g2);
        const Monomial lead = m1.rbegin()->first;
        if (m2.rbegin()->first != lead)
            continue;
        if (best && lead > *best)
            continue;
        if (!best || lead < *best) {
            best = lead;
            acc = Accumulator{};
            previous.reset();
        }

        // Conjugate images give real and imaginary parts.
        const u64 half = f.inv(2);
        const u64 inv_2s = f.inv(f.add(s1, s1));
        std::map<Monomial, std::pair<u64, u64>> residues;
        for (const auto& [m, v1] : m1) {
            auto it = m2.find(m);
            const u64 v2 = it == m2.end() ? 0 : it->second;
            residues[m] = {f.mul(f.add(v1, v2), half), f.mul(f.sub(v1, v2), inv_2s)};
        }
        for (const auto& [m, v2] : m2)
            if (!m1.contains(m))
                residues[m] = {f.mul(v2, half), f.mul(f.neg(v2), inv_2s)};
        acc.add(prime.p, residues);

        auto candidate = acc.reconstruct();
        if (!candidate)
            continue;
        if (previous && *previous == *candidate) {
            if (auto first = divide_exact(p, *candidate)) {
                if (auto second = divide_exact(q, *candidate))
                    return GcdCofactors{std::move(*candidate), std::move(*first), std::move(*second)};
            }
        }
        previous = std::move(candidate);
    }
    return std::nullopt;
}

} // namespace kpalg::detail
