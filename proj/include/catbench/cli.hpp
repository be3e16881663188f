#pragma once

#include <string>
#include <vector>

#include "catbench/report.hpp"

namespace catbench {

// Outcome of one workbench invocation.  exit_code 0 means every requested
// check passed, 1 means a check failed (the report carries the
// counterexample), 2 means the command line or an input file was unusable
// (error holds the message and the report is empty).
struct CommandResult {
    int exit_code = 0;
    Report report;
    std::string error;
};

// Runs one command line, program name excluded.  Never throws; every
// failure mode is folded into the result.
CommandResult run_command(const std::vector<std::string>& args);

std::string usage();

// Entry point for the catbench binary: prints the report to stdout (or the
// error plus usage to stderr) and returns the exit code.
int run_cli(int argc, char** argv);

}  // namespace catbench
