#ifndef KPALG_ERROR_HPP
#define KPALG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kpalg {

enum class ErrorCode {
    zero_denominator,
    division_by_zero,
    undefined_composition,
    both_zero,
    degenerate_metric,
    non_constant_entries,
    non_polynomial_entries,
    not_diagonal,
    unsupported_automorphism,
    invalid_automorphism,
    invalid_argument,
    parse_error,
};

/// snake_case identifier, used verbatim in CLI error payloads.
std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Expression syntax error; offset is the byte position in the source text.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message);

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace kpalg

#endif
