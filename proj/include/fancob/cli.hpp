#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fancob {

/// Exit codes: 0 every check passed, 1 a geometric check failed, 2 input or parse error.
enum ExitCode : int { kOk = 0, kGeometricFailure = 1, kInputError = 2 };

/// Runs the command line (args excludes the program name), writing reports to out and
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fancob
