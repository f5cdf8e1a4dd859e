#include <cstdio>
#include <string>
#include <vector>

#include "setfam/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const setfam::cli::RunResult result = setfam::cli::run(args);
    if (!result.report.empty()) {
        std::fputs(result.report.c_str(), stdout);
    }
    if (!result.diagnostics.empty()) {
        std::fputs(result.diagnostics.c_str(), stderr);
    }
    return result.exit_code;
}
