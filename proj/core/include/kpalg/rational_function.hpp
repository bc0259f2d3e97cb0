#ifndef KPALG_RATIONAL_FUNCTION_HPP
#define KPALG_RATIONAL_FUNCTION_HPP

#include "kpalg/polynomial.hpp"

namespace kpalg {

/// Element of Q(i)(x, y) kept in canonical form: num and den coprime, and
/// den scaled so its lex-leading coefficient is 1. Zero is 0/1. Two values
/// are equal exactly when their representations are equal.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long constant) : num_(constant), den_(1) {}
    RationalFunction(const GaussianRational& constant) : num_(constant), den_(1) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}

    /// Reduces num/den to canonical form. Throws Error(zero_denominator).
    static RationalFunction normalize(const Polynomial& num, const Polynomial& den);

    static RationalFunction x() { return RationalFunction(Polynomial::x()); }
    static RationalFunction y() { return RationalFunction(Polynomial::y()); }

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return den_.is_constant() && num_.is_constant(); }
    bool depends_on(Var v) const noexcept { return num_.depends_on(v) || den_.depends_on(v); }
    /// Value of a constant function; meaningful only when is_constant().
    GaussianRational constant_value() const { return num_.constant_term(); }

    /// Throws Error(division_by_zero) on zero.
    RationalFunction inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    RationalFunction pow(long exponent) const;

    RationalFunction& operator+=(const RationalFunction& other);
    RationalFunction& operator-=(const RationalFunction& other);
    RationalFunction& operator*=(const RationalFunction& other);
    RationalFunction& operator/=(const RationalFunction& other);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(const RationalFunction& a);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct canonical_tag {};
    RationalFunction(Polynomial num, Polynomial den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    /// Scales num and den so den is monic; assumes they are already coprime.
    static RationalFunction from_coprime(Polynomial num, Polynomial den);

    Polynomial num_;
    Polynomial den_;
};

enum class ArithOp { add, sub, mul, div };

/// Field operation by tag; equivalent to the corresponding operator.
RationalFunction arith(ArithOp op, const RationalFunction& f, const RationalFunction& g);

/// Partial derivative by the quotient rule.
RationalFunction partial(const RationalFunction& f, Var v);

/// f(sx, sy). Throws Error(undefined_composition) when the substituted
/// denominator vanishes identically.
RationalFunction substitute(const RationalFunction& f, const RationalFunction& sx, const RationalFunction& sy);

} // namespace kpalg

#endif
