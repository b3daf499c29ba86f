#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posmap::cli {

/// Exit statuses shared by analyze, decide-nonneg and verify.
enum ExitCode : int {
    kPositive = 0,
    kNotPositive = 1,
    kUnknown = 2,
    kUsageError = 3,
    kInternalError = 4,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posmap::cli
