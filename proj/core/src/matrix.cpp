#include "kpalg/matrix.hpp"

#include "kpalg/expr.hpp"

#include <ostream>

namespace kpalg {

Matrix2 Matrix2::identity()
{
    Matrix2 out;
    out(0, 0) = RationalFunction(1);
    out(1, 1) = RationalFunction(1);
    return out;
}

Matrix2 Matrix2::transpose() const
{
    Matrix2 out = *this;
    std::swap(out(0, 1), out(1, 0));
    return out;
}

RationalFunction Matrix2::determinant() const
{
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

Matrix2 Matrix2::substitute(const RationalFunction& sx, const RationalFunction& sy) const
{
    Matrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = kpalg::substitute(m[i][j], sx, sy);
    return out;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b)
{
    Matrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return out;
}

Matrix2 operator*(const RationalFunction& s, const Matrix2& a)
{
    Matrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = s * a(i, j);
    return out;
}

Matrix2 operator-(const Matrix2& a)
{
    Matrix2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out(i, j) = -a(i, j);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix2& a)
{
    return os << "[[" << format_expr(a(0, 0)) << ", " << format_expr(a(0, 1)) << "], [" << format_expr(a(1, 0))
              << ", " << format_expr(a(1, 1)) << "]]";
}

} // namespace kpalg
