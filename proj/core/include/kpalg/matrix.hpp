#ifndef KPALG_MATRIX_HPP
#define KPALG_MATRIX_HPP

#include "kpalg/rational_function.hpp"

#include <array>
#include <iosfwd>

namespace kpalg {

/// Dense 2x2 matrix over Q(i)(x, y).
struct Matrix2 {
    std::array<std::array<RationalFunction, 2>, 2> m{};

    static Matrix2 identity();

    RationalFunction& operator()(int row, int col) { return m[row][col]; }
    const RationalFunction& operator()(int row, int col) const { return m[row][col]; }

    Matrix2 transpose() const;
    RationalFunction determinant() const;
    /// Entrywise substitution x -> sx, y -> sy.
    Matrix2 substitute(const RationalFunction& sx, const RationalFunction& sy) const;

    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator*(const RationalFunction& s, const Matrix2& a);
    friend Matrix2 operator-(const Matrix2& a);
    friend bool operator==(const Matrix2& a, const Matrix2& b) = default;
};

std::ostream& operator<<(std::ostream& os, const Matrix2& a);

} // namespace kpalg

#endif
