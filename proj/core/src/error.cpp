#include "kpalg/error.hpp"

namespace kpalg {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::zero_denominator: return "zero_denominator";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::undefined_composition: return "undefined_composition";
    case ErrorCode::both_zero: return "both_zero";
    case ErrorCode::degenerate_metric: return "degenerate_metric";
    case ErrorCode::non_constant_entries: return "non_constant_entries";
    case ErrorCode::non_polynomial_entries: return "non_polynomial_entries";
    case ErrorCode::not_diagonal: return "not_diagonal";
    case ErrorCode::unsupported_automorphism: return "unsupported_automorphism";
    case ErrorCode::invalid_automorphism: return "invalid_automorphism";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse_error: return "parse_error";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code)
{
}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(ErrorCode::parse_error, message + " at offset " + std::to_string(offset)), offset_(offset)
{
}

} // namespace kpalg
