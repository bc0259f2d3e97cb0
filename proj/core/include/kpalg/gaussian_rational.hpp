#ifndef KPALG_GAUSSIAN_RATIONAL_HPP
#define KPALG_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace kpalg {

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
///
/// Both parts are kept canonical by GMP (coprime numerator/denominator,
/// positive denominator), so equality is exact representation equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    static GaussianRational fraction(long num, long den);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return sgn(im_) == 0 && re_ == 1; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Throws Error(division_by_zero) on zero.
    GaussianRational inverse() const;
    GaussianRational pow(unsigned exponent) const;
    /// Integer power; negative exponents invert first.
    GaussianRational pow(long exponent) const;

    GaussianRational& operator+=(const GaussianRational& other);
    GaussianRational& operator-=(const GaussianRational& other);
    GaussianRational& operator*=(const GaussianRational& other);
    GaussianRational& operator/=(const GaussianRational& other);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Total order on (re, im); used for deterministic tie-breaking only.
bool lex_less(const GaussianRational& a, const GaussianRational& b);

/// Plain debug rendering such as "3/2" or "(1, -2)"; see expr.hpp for the
/// parseable format.
std::string debug_string(const GaussianRational& value);
std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

} // namespace kpalg

#endif
