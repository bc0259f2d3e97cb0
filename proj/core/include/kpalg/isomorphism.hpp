#ifndef KPALG_ISOMORPHISM_HPP
#define KPALG_ISOMORPHISM_HPP

#include "kpalg/automorphism.hpp"
#include "kpalg/kp_core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpalg {

enum class Verdict { isomorphic, not_isomorphic, undecided };

/// "isomorphic" | "not_isomorphic" | "undecided"
std::string_view to_string(Verdict verdict) noexcept;

/// Refutation and residual codes carried by certificates.
namespace reason {
inline constexpr std::string_view c_mismatch = "C_MISMATCH";
inline constexpr std::string_view support_mismatch = "SUPPORT_MISMATCH";
inline constexpr std::string_view no_scale_relation = "NO_SCALE_RELATION";
/// A sufficient condition failed; says nothing about non-isomorphism.
inline constexpr std::string_view sufficient_fail = "SUFFICIENT_FAIL";
/// The scale factor exists over C but not provably in Q(i).
inline constexpr std::string_view root_not_in_base_field = "ROOT_NOT_IN_BASE_FIELD";
} // namespace reason

/// alpha^exponent = value
struct ScaleConstraint {
    unsigned exponent = 1;
    GaussianRational value;

    /// e.g. "alpha^2 = 2"
    std::string to_string() const;

    friend bool operator==(const ScaleConstraint&, const ScaleConstraint&) = default;
};

struct IsoCertificate {
    Verdict verdict = Verdict::undecided;
    std::optional<Automorphism> witness;
    std::optional<ScaleConstraint> constraint;
    std::optional<std::string> reason;

    static IsoCertificate isomorphic(Automorphism witness);
    static IsoCertificate not_isomorphic(std::string_view reason);
    static IsoCertificate undecided(ScaleConstraint constraint, std::string_view reason);
};

/// Search space of brute_force_iso.
struct SearchBounds {
    static constexpr unsigned max_supported_degree = 16;

    /// Degree bound for the shift p(x), so p' has degree < max_p_degree.
    unsigned max_p_degree = 4;
    std::vector<GaussianRational> alpha_candidates;
};

/// A^T phi(g) A with A = jacobian(phi). Under this convention
/// transform_metric(transform_metric(g, inner), outer) equals
/// transform_metric(g, compose(outer, inner)).
Metric transform_metric(const Metric& g, const Automorphism& phi);

/// phi is a Poisson automorphism and transform_metric(g, phi) == g2.
/// Throws Error(degenerate_metric) if either metric is degenerate.
bool verify_iso(const Metric& g, const Metric& g2, const Automorphism& phi);

/// phi(eta_g) == eta_g2, the necessary transport of eta under an isomorphism.
bool eta_obstruction(const Metric& g, const Metric& g2, const Automorphism& phi);

/// Complete classification for constant metrics: isomorphic iff c = c2.
IsoCertificate decide_constant(const Metric& g, const Metric& g2);

/// Sufficient test for metrics with entries in Q(i)[x] at a given scale
/// alpha. Failure yields SUFFICIENT_FAIL, never a non-isomorphism claim.
IsoCertificate check_xdep_sufficient(const Metric& g, const Metric& g2, const GaussianRational& alpha);

/// Complete classification for diagonal metrics with entries in Q(i)[x]:
/// isomorphic iff c2(x) = c(alpha x) and a2(x) = alpha^2 a(alpha x).
IsoCertificate decide_diag_x(const Metric& g, const Metric& g2);

/// Sufficient test for diagonal metrics with entries in Q(i)[y]:
/// a2(y) = alpha^2 a(y + lambda), c2(y) = c(y + lambda).
IsoCertificate check_diag_y_sufficient(const Metric& g, const Metric& g2);

/// Exhaustive oracle over bounds.alpha_candidates (in order) for metrics with
/// entries in Q(i)[x]: solves the linear equations on the coefficients of p'
/// and accepts the first candidate that verify_iso confirms.
std::optional<Automorphism> brute_force_iso(const Metric& g, const Metric& g2, const SearchBounds& bounds);

} // namespace kpalg

#endif
