#ifndef KPALG_POLYNOMIAL_HPP
#define KPALG_POLYNOMIAL_HPP

#include "kpalg/gaussian_rational.hpp"

#include <compare>
#include <map>
#include <optional>

namespace kpalg {

enum class Var { x, y };

/// Exponent pair x^dx * y^dy. Ordered lexicographically with x before y.
struct Monomial {
    unsigned dx = 0;
    unsigned dy = 0;

    auto operator<=>(const Monomial&) const = default;

    unsigned degree(Var v) const noexcept { return v == Var::x ? dx : dy; }
    unsigned total_degree() const noexcept { return dx + dy; }
    bool divides(const Monomial& other) const noexcept { return dx <= other.dx && dy <= other.dy; }
};

/// Sparse polynomial in Q(i)[x, y].
///
/// Terms are stored in a map keyed by Monomial, so iteration runs in
/// ascending lex order and the leading (lex-greatest) term is the last one.
/// Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussianRational>;

    Polynomial() = default;
    Polynomial(long constant);
    Polynomial(const GaussianRational& constant);

    static Polynomial variable(Var v);
    static Polynomial x() { return variable(Var::x); }
    static Polynomial y() { return variable(Var::y); }
    static Polynomial term(const GaussianRational& coefficient, Monomial m);

    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool depends_on(Var v) const noexcept;

    unsigned degree(Var v) const noexcept;
    unsigned total_degree() const noexcept;
    /// Smallest exponent of v over all terms (0 for the zero polynomial).
    unsigned min_degree(Var v) const noexcept;

    /// Lex-greatest monomial; undefined on zero.
    const Monomial& leading_monomial() const;
    const GaussianRational& leading_coefficient() const;
    GaussianRational coefficient(Monomial m) const;
    /// Constant term as a scalar.
    GaussianRational constant_term() const { return coefficient({0, 0}); }
    /// Coefficient of x^k as a polynomial in y.
    Polynomial coefficient_x(unsigned k) const;

    /// Scaled so the leading coefficient is 1; zero stays zero.
    Polynomial monic() const;

    Polynomial derivative(Var v) const;
    Polynomial pow(unsigned exponent) const;
    /// p(s*x, y) or p(x, s*y).
    Polynomial scale_variable(Var v, const GaussianRational& s) const;
    GaussianRational evaluate(const GaussianRational& x, const GaussianRational& y) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const GaussianRational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
    friend Polynomial operator*(const GaussianRational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const Monomial& m, const GaussianRational& c);

    TermMap terms_;
};

/// Quotient if divisor divides dividend exactly, otherwise nullopt.
/// Throws Error(division_by_zero) when divisor is zero.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

/// Greatest common divisor normalized to leading coefficient 1.
///
/// Recursive on x over Q(i)[y]: contents are univariate gcds in y, and
/// primitive parts go through a primitive pseudo-remainder sequence.
/// Throws Error(both_zero) when both inputs are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

struct GcdCofactors {
    Polynomial gcd;
    /// p / gcd
    Polynomial first;
    /// q / gcd
    Polynomial second;
};

/// gcd(p, q) together with both exact quotients.
GcdCofactors gcd_cofactors(const Polynomial& p, const Polynomial& q);

} // namespace kpalg

#endif
