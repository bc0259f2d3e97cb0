#include "cli/command.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = kpalg::cli::run_command(args);
    std::cout << kpalg::cli::render(result) << '\n';
    if (!result.diagnostic.empty())
        std::cerr << "kpalg: " << result.diagnostic << '\n';
    return result.exit_code;
}
