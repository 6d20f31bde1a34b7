#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gramderiv::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,  // usage, parse, domain and index errors
    kOverflow = 3,
    kNotMonomial = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. `color` enables ANSI styling of PASS/FAIL.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false);

} // namespace gramderiv::cli
