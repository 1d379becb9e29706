#pragma once

#include <ostream>

namespace korobov::cli {

enum ExitCode : int {
    kOk = 0,
    kValidationError = 2,
    kResourceLimit = 3,
};

/// Entry point of the `korobov` tool. Subcommands: spectrum, complexity,
/// classify, fit, curse, approx, zeta. Results go to `out` (or --out),
/// diagnostics and usage to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace korobov::cli
