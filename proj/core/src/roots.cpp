#include "kpalg/roots.hpp"

#include "kpalg/error.hpp"

#include <algorithm>

namespace kpalg {

namespace {

std::optional<mpz_class> integer_root(const mpz_class& n, unsigned d)
{
    if (sgn(n) < 0 && d % 2 == 0)
        return std::nullopt;
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), d) == 0)
        return std::nullopt;
    return root;
}

} // namespace

std::optional<mpq_class> rational_root(const mpq_class& q, unsigned d)
{
    if (d == 0)
        throw Error(ErrorCode::invalid_argument, "zeroth root");
    auto num = integer_root(q.get_num(), d);
    if (!num)
        return std::nullopt;
    auto den = integer_root(q.get_den(), d);
    if (!den)
        return std::nullopt;
    mpq_class out(*num, *den);
    out.canonicalize();
    return out;
}

std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z)
{
    if (z.is_zero())
        return GaussianRational();
    // (u + v i)^2 = z  =>  u^2 = (re + |z|)/2,  v^2 = (|z| - re)/2,  2uv = im.
    auto modulus = rational_root(z.norm(), 2);
    if (!modulus)
        return std::nullopt;
    auto u = rational_root((z.re() + *modulus) / 2, 2);
    if (!u)
        return std::nullopt;
    mpq_class v;
    if (sgn(*u) != 0) {
        v = z.im() / (2 * *u);
    } else {
        auto w = rational_root((*modulus - z.re()) / 2, 2);
        if (!w)
            return std::nullopt;
        v = *w;
    }
    GaussianRational root(*u, v);
    if (!(root * root == z))
        return std::nullopt;
    return root;
}

std::vector<GaussianRational> base_field_roots(const GaussianRational& q, unsigned d)
{
    if (d == 0)
        throw Error(ErrorCode::invalid_argument, "zeroth root");
    std::vector<GaussianRational> out;
    if (d == 1) {
        out.push_back(q);
        return out;
    }
    if (d == 2) {
        if (auto r = gaussian_sqrt(q)) {
            out.push_back(*r);
            if (!r->is_zero())
                out.push_back(-*r);
        }
        return out;
    }
    if (!q.is_real())
        return out;
    auto r = rational_root(abs(q.re()), d);
    if (!r)
        return out;
    const GaussianRational base(*r);
    for (const auto& unit : {GaussianRational(1), GaussianRational(-1), GaussianRational::i(), -GaussianRational::i()}) {
        GaussianRational candidate = base * unit;
        if (candidate.pow(d) == q && std::find(out.begin(), out.end(), candidate) == out.end())
            out.push_back(candidate);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(b, a); });
    return out;
}

} // namespace kpalg
