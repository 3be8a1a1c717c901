#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace offswitch::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitUsage = 2,      // bad flags, bad config, invalid parameters
    kExitNumerical = 3,  // degenerate input, quadrature domain error, failed cross-check
    kExitOutput = 4,     // output path not writable
};

/// Runs one command: `delta`, `sweep`, `designer` or `figures`. `args`
/// excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace offswitch::cli
