#pragma once

#include <iosfwd>

namespace sym::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kInconsistent = 3,
};

// Parses argv and runs one subcommand (gkm, pet, pieri, verify), writing
// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sym::cli
