#ifndef KPALG_MODULAR_GCD_HPP
#define KPALG_MODULAR_GCD_HPP

#include "kpalg/polynomial.hpp"

#include <optional>

namespace kpalg::detail {

/// Monic gcd via images modulo word-size primes p = 1 (mod 4).
///
/// Both inputs must be nonzero. Cofactors come from the exact division
/// that certifies the result. Returns nullopt if no verified result was
/// reached within the prime budget.
std::optional<GcdCofactors> modular_gcd(const Polynomial& p, const Polynomial& q);

} // namespace kpalg::detail

#endif
