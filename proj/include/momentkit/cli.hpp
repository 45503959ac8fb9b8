#pragma once

#include <string>
#include <vector>

namespace momentkit {

/// Exit codes: 0 = check passed / object produced, 1 = check failed (JSON
/// explanation with witnesses on stdout), 2 = usage or input error.
struct RunResult {
  int exit_code;
  std::string output;  // stdout payload, normally a JSON document
};

/// Runs one CLI invocation (args excludes the program name) and captures the
/// stdout payload. The MOMENTKIT_SEED environment variable, when set,
/// replaces the default seed of sampling commands unless --seed is given.
RunResult run_cli(const std::vector<std::string>& args);

/// Process entry: parses argv, prints the payload to stdout, returns the
/// exit code.
int run_main(int argc, char** argv);

}  // namespace momentkit
