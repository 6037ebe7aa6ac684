#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bettikit {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitViolation = 2,
    kExitUsage = 64,
};

// Runs the tool on args (without the program name), writing to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bettikit
