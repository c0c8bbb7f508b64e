#include "cpdirac/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const cpdirac::RunResult result = cpdirac::run(args);
    if (!result.out.empty())
        std::cout << result.out;
    if (!result.err.empty())
        std::cerr << result.err;
    return result.exit_code;
}
