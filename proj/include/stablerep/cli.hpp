#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stablerep::cli {

enum ExitCode : int {
    Success = 0,
    VerificationFailed = 1,
    UsageError = 2,
    BudgetExceeded = 3,
};

/// Runs one command line (args excludes the program name). Primary output
/// goes to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Version string that keys the result cache.
const char* version();

}  // namespace stablerep::cli
