#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posgames::cli {

enum ExitCode : int { kOk = 0, kClaimViolated = 1, kUsage = 2, kGuardAbort = 3 };

/// Runs one command line (without the program name). Results go to `out` as
/// JSON or CSV; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posgames::cli
