#ifndef KPALG_CLI_COMMAND_HPP
#define KPALG_CLI_COMMAND_HPP

#include "cli/json_io.hpp"

#include <string>
#include <vector>

namespace kpalg::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_affirmative = 0,
    exit_negative = 1,
    exit_parse_error = 2,
    exit_domain_error = 3,
    exit_undecided = 4,
};

enum class OutputFormat { json, text };

struct CommandResult {
    int exit_code = exit_affirmative;
    Json payload;
    OutputFormat format = OutputFormat::json;
    /// Human-readable detail for stderr; not part of the payload.
    std::string diagnostic;
};

/// Dispatches one invocation. args excludes the program name, e.g.
/// {"decide", "--class", "diag-x", "--metric", "@g.json", "--metric2", "@h.json"}.
/// Never throws; every failure maps to an exit code and an error payload.
CommandResult run_command(const std::vector<std::string>& args);

/// Minified JSON, or one "key: value" line per payload field for text.
std::string render(const CommandResult& result);

} // namespace kpalg::cli

#endif
