#ifndef KPALG_AUTOMORPHISM_HPP
#define KPALG_AUTOMORPHISM_HPP

#include "kpalg/matrix.hpp"

#include <variant>

namespace kpalg {

/// x -> alpha*x, y -> y + p(x), with alpha != 0 and p a polynomial in x.
struct ScaleShear {
    GaussianRational alpha{1};
    Polynomial p;

    friend bool operator==(const ScaleShear&, const ScaleShear&) = default;
};

/// x -> (alpha*x + beta)/(gamma*x + delta),
/// y -> (alpha*x + beta)(gamma*x + delta) y / ((alpha*delta - beta*gamma) x) + r(x).
struct Mobius {
    GaussianRational alpha, beta, gamma, delta;
    RationalFunction r;

    GaussianRational determinant() const { return alpha * delta - beta * gamma; }

    friend bool operator==(const Mobius&, const Mobius&) = default;
};

/// A Poisson automorphism of the canonical algebra {x, y} = x drawn from one
/// of the two classified families. Construction validates the family's
/// invariants and throws Error(invalid_automorphism) on violation.
class Automorphism {
public:
    Automorphism() = default;
    Automorphism(ScaleShear s);
    Automorphism(Mobius m);

    static Automorphism identity() { return Automorphism(); }

    bool is_scale_shear() const noexcept { return std::holds_alternative<ScaleShear>(data_); }
    bool is_mobius() const noexcept { return std::holds_alternative<Mobius>(data_); }
    /// Throws Error(unsupported_automorphism) for Mobius maps.
    const ScaleShear& scale_shear() const;
    const Mobius& mobius() const;

    /// phi(x)
    RationalFunction image_x() const;
    /// phi(y)
    RationalFunction image_y() const;

    friend bool operator==(const Automorphism&, const Automorphism&) = default;

private:
    std::variant<ScaleShear, Mobius> data_{ScaleShear{}};
};

/// phi(f) = f(phi(x), phi(y)). Throws Error(undefined_composition).
RationalFunction apply_auto(const Automorphism& phi, const RationalFunction& f);
Matrix2 apply_auto(const Automorphism& phi, const Matrix2& m);

/// The substitution x -> image_x, y -> image_y respects {x, y} = x exactly
/// when {image_x, image_y} = image_x.
bool is_poisson_morphism(const RationalFunction& image_x, const RationalFunction& image_y);
bool is_poisson_auto(const Automorphism& phi);

/// outer o inner as algebra maps: apply_auto(result, f) = outer(inner(f)).
ScaleShear compose(const ScaleShear& outer, const ScaleShear& inner);
/// Mobius arguments throw Error(unsupported_automorphism).
Automorphism compose(const Automorphism& outer, const Automorphism& inner);

/// (1/alpha, -p(x/alpha))
ScaleShear invert(const ScaleShear& phi);
Automorphism invert(const Automorphism& phi);

/// [[d phi(x)/dx, d phi(x)/dy], [d phi(y)/dx, d phi(y)/dy]]
Matrix2 jacobian(const Automorphism& phi);

} // namespace kpalg

#endif
