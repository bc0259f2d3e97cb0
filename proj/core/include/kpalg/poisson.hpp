#ifndef KPALG_POISSON_HPP
#define KPALG_POISSON_HPP

#include "kpalg/rational_function.hpp"

namespace kpalg {

/// Linear Poisson structure {x, y} = lambda*x + mu*y on Q(i)(x, y).
class PoissonStructure {
public:
    /// Throws Error(invalid_argument) when lambda = mu = 0.
    PoissonStructure(GaussianRational lambda, GaussianRational mu);

    /// {x, y} = x
    static PoissonStructure canonical() { return {GaussianRational(1), GaussianRational(0)}; }

    const GaussianRational& lambda() const noexcept { return lambda_; }
    const GaussianRational& mu() const noexcept { return mu_; }
    /// lambda*x + mu*y
    RationalFunction xy_bracket() const;

    friend bool operator==(const PoissonStructure&, const PoissonStructure&) = default;

private:
    GaussianRational lambda_;
    GaussianRational mu_;
};

/// Affine map x -> a11*x + a12*y + a13, y -> a21*x + a22*y + a23 with an
/// invertible linear part.
struct LinearMap {
    GaussianRational a11, a12, a13;
    GaussianRational a21, a22, a23;

    GaussianRational linear_determinant() const { return a11 * a22 - a12 * a21; }
    RationalFunction image_x() const;
    RationalFunction image_y() const;
    RationalFunction apply(const RationalFunction& f) const;
};

/// {f, g} = (f_x g_y - f_y g_x) * {x, y}.
RationalFunction bracket(const RationalFunction& f, const RationalFunction& g,
                         const PoissonStructure& structure = PoissonStructure::canonical());

/// A Poisson isomorphism from (Q(i)(x, y), structure) onto the canonical
/// algebra, i.e. {phi(x), phi(y)} = phi(lambda*x + mu*y) with {x, y} = x:
///   lambda = 0:  phi(x) = -mu*y,     phi(y) = x
///   lambda != 0: phi(x) = x - mu*y,  phi(y) = lambda*y
LinearMap normalize_to_canonical(const PoissonStructure& structure);

} // namespace kpalg

#endif
