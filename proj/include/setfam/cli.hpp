#ifndef SETFAM_CLI_HPP
#define SETFAM_CLI_HPP

#include <string>
#include <vector>

namespace setfam::cli {

// Outcome of one command-line invocation. `report` is the JSON document
// (or help text for --help) to print on standard output; `diagnostics`
// carries human-readable error detail for standard error.
struct RunResult {
    int exit_code = 0;
    std::string report;
    std::string diagnostics;
};

// Parses and executes one subcommand. Never throws: usage, domain, and
// envelope problems all come back as an error report with exit code 1.
RunResult run(const std::vector<std::string>& args);

}  // namespace setfam::cli

#endif
