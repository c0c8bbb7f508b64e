#pragma once

#include <string>
#include <vector>

namespace cpdirac {

struct RunResult {
    int exit_code = 0;
    std::string out; // rendered result, for stdout
    std::string err; // diagnostics, for stderr
};

// Dispatches one subcommand. Exit codes: 0 success, 2 parameter validation
// failure (with the violated constraint named), 1 internal consistency
// failure (non-integral multiplicity, oracle mismatch in `verify`).
RunResult run(const std::vector<std::string>& args);

std::string usage();

} // namespace cpdirac
