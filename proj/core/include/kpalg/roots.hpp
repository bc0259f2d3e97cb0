#ifndef KPALG_ROOTS_HPP
#define KPALG_ROOTS_HPP

#include "kpalg/gaussian_rational.hpp"

#include <optional>
#include <vector>

namespace kpalg {

/// Exact real d-th root of q over Q. Even d needs q >= 0 and yields the
/// nonnegative root; odd d keeps the sign of q.
std::optional<mpq_class> rational_root(const mpq_class& q, unsigned d);

/// Exact square root in Q(i), chosen with the lex-greatest (re, im) of the
/// two roots (so re > 0, or re = 0 and im >= 0).
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z);

/// Solutions of alpha^d = q found in Q(i), ordered lex-greatest first.
///
/// d = 1 and d = 2 are solved completely. For d > 2 only q in Q is handled:
/// candidates are the unit multiples {1, -1, i, -i} of the real d-th root of
/// |q|. An empty result does not prove that no root exists in Q(i).
std::vector<GaussianRational> base_field_roots(const GaussianRational& q, unsigned d);

} // namespace kpalg

#endif
