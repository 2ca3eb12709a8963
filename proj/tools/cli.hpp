#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evidentia::cli {

enum ExitCode { kSuccess = 0, kFailure = 1, kIoError = 2 };

/// Runs `evidentia` with `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evidentia::cli
