#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primecover {

/// Exit statuses of the command-line front-end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitDomain = 1,  // computation rejected its inputs
    kExitUsage = 2,   // invalid or unknown flags
    kExitOutput = 3,  // report could not be written
};

/// Run one batch command. args excludes the program name. The report goes to
/// `out` unless --output names a file; diagnostics go to `err` as one line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primecover
