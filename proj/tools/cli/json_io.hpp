#ifndef KPALG_CLI_JSON_IO_HPP
#define KPALG_CLI_JSON_IO_HPP

#include "kpalg/isomorphism.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace kpalg::cli {

using Json = nlohmann::ordered_json;

/// Malformed command-line input (bad JSON, schema violation, unknown flag).
class UsageError : public std::runtime_error {
public:
    UsageError(std::string code, const std::string& message) : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Inline JSON text, or "@path" to read it from a file.
Json load_json_argument(const std::string& argument);

/// {"entries": [[e11, e12], [e21, e22]]}; e12 and e21 must agree.
Metric metric_from_json(const Json& j);
Json to_json(const Metric& g);

/// {"type": "scale_shear", "alpha": EXPR, "p": EXPR}
/// {"type": "mobius", "alpha": .., "beta": .., "gamma": .., "delta": .., "r": EXPR}
Automorphism automorphism_from_json(const Json& j);
Json to_json(const Automorphism& phi);

/// Keys in the order verdict, witness, constraint, reason; absent ones omitted.
Json to_json(const IsoCertificate& cert);

} // namespace kpalg::cli

#endif
