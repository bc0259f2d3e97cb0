#ifndef KPALG_EXPR_HPP
#define KPALG_EXPR_HPP

#include "kpalg/rational_function.hpp"

#include <string>
#include <string_view>

namespace kpalg {

/// Parses an exact expression over Q(i)(x, y).
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | factor
///   factor := base ('^' uint)?
///   base   := '(' expr ')' | 'x' | 'y' | 'i' | uint
///
/// There is no implicit multiplication: "x y" and "2x" are rejected.
/// Throws ParseError with the byte offset of the offending token, or
/// Error(division_by_zero) for a literal division by zero.
RationalFunction parse_expr(std::string_view source);

/// Canonical text: numerator terms in descending lex order (x before y),
/// then "/den" when the denominator is not 1. parse_expr inverts it exactly.
std::string format_expr(const RationalFunction& f);
std::string format_polynomial(const Polynomial& p);
/// "3", "-1/2", "2*i", "1 - 3*i"
std::string format_constant(const GaussianRational& c);

/// parse_expr, then require a constant value.
/// Throws Error(invalid_argument) for non-constant input.
GaussianRational parse_constant(std::string_view source);

} // namespace kpalg

#endif
