#include "kpalg/gaussian_rational.hpp"

#include "kpalg/error.hpp"

#include <ostream>

namespace kpalg {

GaussianRational GaussianRational::fraction(long num, long den)
{
    if (den == 0)
        throw Error(ErrorCode::division_by_zero, "fraction with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::division_by_zero, "inverse of zero");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned exponent) const
{
    GaussianRational result(1);
    GaussianRational base = *this;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent != 0)
            base *= base;
    }
    return result;
}

GaussianRational GaussianRational::pow(long exponent) const
{
    if (exponent >= 0)
        return pow(static_cast<unsigned>(exponent));
    return inverse().pow(static_cast<unsigned>(-exponent));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other)
{
    re_ += other.re_;
    im_ += other.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other)
{
    re_ -= other.re_;
    im_ -= other.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other)
{
    if (sgn(im_) == 0 && sgn(other.im_) == 0) {
        re_ *= other.re_;
        return *this;
    }
    mpq_class re = re_ * other.re_ - im_ * other.im_;
    mpq_class im = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& other)
{
    if (other.is_zero())
        throw Error(ErrorCode::division_by_zero, "division by zero coefficient");
    if (sgn(other.im_) == 0) {
        re_ /= other.re_;
        im_ /= other.re_;
        return *this;
    }
    return *this *= other.inverse();
}

bool lex_less(const GaussianRational& a, const GaussianRational& b)
{
    if (a.re() != b.re())
        return a.re() < b.re();
    return a.im() < b.im();
}

std::string debug_string(const GaussianRational& value)
{
    if (value.is_real())
        return value.re().get_str();
    return "(" + value.re().get_str() + ", " + value.im().get_str() + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& value)
{
    return os << debug_string(value);
}

} // namespace kpalg
