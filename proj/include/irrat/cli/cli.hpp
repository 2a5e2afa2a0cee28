#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irrat::cli {

/// Exit codes: 0 success (nice certificate / classification output),
/// 1 usage or input error, 2 violated certificate.
enum ExitCode : int { kOk = 0, kUsage = 1, kViolated = 2 };

/// Runs the command line `irratcert <args...>`; args excludes the program
/// name. Reports go to `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace irrat::cli
