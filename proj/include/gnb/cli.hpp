#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gnb {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,   // verification failure or I/O error
    kExitUsage = 2,
    kExitResource = 3,  // a configured cap was hit
};

/// Runs the command line (without the program name). Results go to `out`
/// (or the --out file) in one write at the end; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gnb
