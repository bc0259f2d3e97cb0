#ifndef KPALG_KP_CORE_HPP
#define KPALG_KP_CORE_HPP

#include "kpalg/matrix.hpp"
#include "kpalg/poisson.hpp"

namespace kpalg {

/// Symmetric metric [[a, b], [b, c]].
struct Metric {
    RationalFunction a;
    RationalFunction b;
    RationalFunction c;

    static Metric diagonal(RationalFunction a, RationalFunction c) { return {std::move(a), RationalFunction(), std::move(c)}; }
    static Metric identity() { return diagonal(RationalFunction(1), RationalFunction(1)); }
    /// Throws Error(invalid_argument) unless m is symmetric.
    static Metric from_matrix(const Matrix2& m);

    Matrix2 matrix() const;
    bool is_diagonal() const noexcept { return b.is_zero(); }

    friend bool operator==(const Metric&, const Metric&) = default;
};

/// a*c - b^2
RationalFunction det(const Metric& g);

/// The matrix of brackets of the generators, [[0, {x,y}], [-{x,y}, 0]].
Matrix2 poisson_matrix(const PoissonStructure& structure = PoissonStructure::canonical());

/// eta * P g P g P == -P, evaluated by direct matrix multiplication.
bool satisfies_kp_condition(const Metric& g, const RationalFunction& eta,
                            const PoissonStructure& structure = PoissonStructure::canonical());

struct KPAlgebra {
    PoissonStructure structure = PoissonStructure::canonical();
    Metric metric;
    RationalFunction eta;
};

/// Builds the Kahler-Poisson algebra of g over the canonical structure with
/// eta = 1/(x^2 det g), after re-verifying the matrix identity.
/// Throws Error(degenerate_metric) when det g = 0.
KPAlgebra kp_check(const Metric& g);

} // namespace kpalg

#endif
