#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lebx::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBadInput = 2,
    kInvariantViolation = 3,
    kBudgetExceeded = 4,
};

/// Runs one command line (args excludes the program name). Results go to out, or
/// to --out when given; diagnostics go to err. Nothing is written on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lebx::cli
